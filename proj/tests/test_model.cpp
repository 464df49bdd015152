#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "aoi/errors.hpp"
#include "aoi/model.hpp"

using namespace aoi;

TEST_CASE("packet durations from the default PHY profile") {
    PhyConfig phy;
    // 20 us header + (246 + 8*payload)/6 us airtime + 6 us extension
    CHECK(packet_duration(128, phy) == doctest::Approx(237.0 + 2.0 / 3.0).epsilon(1e-12));
    CHECK(packet_duration(64, phy) == doctest::Approx(152.0 + 1.0 / 3.0).epsilon(1e-12));
    CHECK(packet_duration(16, phy) == doctest::Approx(88.0 + 1.0 / 3.0).epsilon(1e-12));
    CHECK(request_duration(phy) == doctest::Approx(52.0 + 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("symbol alignment rounds airtime up to 4 us") {
    PhyConfig phy;
    phy.symbol_alignment = true;
    CHECK(packet_duration(128, phy) == doctest::Approx(238.0).epsilon(1e-12));
    CHECK(packet_duration(64, phy) == doctest::Approx(154.0).epsilon(1e-12));
    CHECK(packet_duration(16, phy) == doctest::Approx(90.0).epsilon(1e-12));
    CHECK(request_duration(phy) == doctest::Approx(54.0).epsilon(1e-12));
}

TEST_CASE("timing_from_phy bundles packet and request durations") {
    TimingModel t = timing_from_phy(128, PhyConfig{});
    CHECK(t.t_pk == doctest::Approx(237.0 + 2.0 / 3.0).epsilon(1e-12));
    CHECK(t.t_r == doctest::Approx(52.0 + 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("timing validation") {
    CHECK_THROWS_AS((TimingModel{0.0, 1.0}.validate()), ConfigError);
    CHECK_THROWS_AS((TimingModel{-1.0, 1.0}.validate()), ConfigError);
    CHECK_THROWS_AS((TimingModel{1.0, -0.5}.validate()), ConfigError);
    CHECK_NOTHROW((TimingModel{1.0, 0.0}.validate()));  // zero request slots allowed
}

TEST_CASE("phy validation") {
    PhyConfig phy;
    phy.bitrate = 0.0;
    CHECK_THROWS_AS(phy.validate(), ConfigError);
    phy = PhyConfig{};
    phy.phy_header = -1.0;
    CHECK_THROWS_AS(phy.validate(), ConfigError);
    CHECK_THROWS_AS(packet_duration(-1, PhyConfig{}), ConfigError);
}

TEST_CASE("protocol names round-trip") {
    for (Protocol p : {Protocol::SA, Protocol::FSA, Protocol::RTA})
        CHECK(protocol_from_name(protocol_name(p)) == p);
    CHECK_THROWS_AS(protocol_from_name("csma"), ConfigError);
    CHECK(protocol_from_name("sa") == Protocol::SA);
    CHECK(protocol_from_name("fsa") == Protocol::FSA);
    CHECK(protocol_from_name("rta") == Protocol::RTA);
}

TEST_CASE("make_params pins k = 1 for slotted aloha") {
    ProtocolParams p = make_params(Protocol::SA, 10, 0.1, 5);
    CHECK(p.k == 1);
    p = make_params(Protocol::FSA, 10, 0.1, 5);
    CHECK(p.k == 5);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_params(Protocol::SA, 0, 0.1).validate(), ConfigError);
    CHECK_THROWS_AS(make_params(Protocol::SA, 10, -0.1).validate(), ConfigError);
    CHECK_THROWS_AS(make_params(Protocol::SA, 10, 1.1).validate(), ConfigError);
    CHECK_THROWS_AS(make_params(Protocol::FSA, 10, 0.5, 0).validate(), ConfigError);
    CHECK_THROWS_AS(make_params(Protocol::FSA, 10, 0.5, 5, -1.0).validate(), ConfigError);
    ProtocolParams p = make_params(Protocol::SA, 10, 0.5);
    p.k = 3;  // inconsistent by construction
    CHECK_THROWS_AS(p.validate(), ConfigError);
    CHECK_NOTHROW(make_params(Protocol::RTA, 1, 1.0, 1).validate());
    CHECK_NOTHROW(make_params(Protocol::SA, 10, 0.0).validate());
}

TEST_CASE("phy profile loads from json") {
    std::string path = "test_phy_profile.json";
    {
        std::ofstream f(path);
        f << R"({"bitrate": 12.0, "phy_header": 16.0, "mac_overhead_bits": 240,
               "signal_extension": 0.0, "request_frame_bits": 120,
               "symbol_alignment": true})";
    }
    PhyConfig phy = load_phy_config(path);
    CHECK(phy.bitrate == doctest::Approx(12.0));
    CHECK(phy.phy_header == doctest::Approx(16.0));
    CHECK(phy.mac_overhead_bits == doctest::Approx(240.0));
    CHECK(phy.signal_extension == doctest::Approx(0.0));
    CHECK(phy.request_frame_bits == doctest::Approx(120.0));
    CHECK(phy.symbol_alignment);
    // airtime (240 + 8*16)/12 = 30.667 -> aligned 32; total 16 + 32 + 0
    CHECK(packet_duration(16, phy) == doctest::Approx(48.0).epsilon(1e-12));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_phy_config("does_not_exist.json"), ConfigError);
}

TEST_CASE("partial phy profile keeps defaults for absent fields") {
    std::string path = "test_phy_partial.json";
    {
        std::ofstream f(path);
        f << R"({"bitrate": 3.0})";
    }
    PhyConfig phy = load_phy_config(path);
    CHECK(phy.bitrate == doctest::Approx(3.0));
    CHECK(phy.phy_header == doctest::Approx(20.0));
    CHECK(phy.request_frame_bits == doctest::Approx(160.0));
    CHECK_FALSE(phy.symbol_alignment);
    std::remove(path.c_str());
}

TEST_CASE("malformed phy profile is rejected") {
    std::string path = "test_phy_bad.json";
    {
        std::ofstream f(path);
        f << "{ not json";
    }
    CHECK_THROWS_AS(load_phy_config(path), ConfigError);
    std::remove(path.c_str());
}
