#include "aoi/model.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace aoi {

void PhyConfig::validate() const {
    if (!(bitrate > 0)) throw ConfigError("bitrate must be positive");
    if (!(phy_header >= 0)) throw ConfigError("phy_header must be non-negative");
    if (!(mac_overhead_bits >= 0))
        throw ConfigError("mac_overhead_bits must be non-negative");
    if (!(signal_extension >= 0))
        throw ConfigError("signal_extension must be non-negative");
    if (!(request_frame_bits >= 0))
        throw ConfigError("request_frame_bits must be non-negative");
}

PhyConfig load_phy_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open PHY config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed PHY config " + path + ": " + e.what());
    }
    PhyConfig phy;
    if (j.contains("bitrate")) phy.bitrate = j.at("bitrate").get<double>();
    if (j.contains("phy_header")) phy.phy_header = j.at("phy_header").get<double>();
    if (j.contains("mac_overhead_bits"))
        phy.mac_overhead_bits = j.at("mac_overhead_bits").get<double>();
    if (j.contains("signal_extension"))
        phy.signal_extension = j.at("signal_extension").get<double>();
    if (j.contains("request_frame_bits"))
        phy.request_frame_bits = j.at("request_frame_bits").get<double>();
    if (j.contains("symbol_alignment"))
        phy.symbol_alignment = j.at("symbol_alignment").get<bool>();
    phy.validate();
    return phy;
}

void TimingModel::validate() const {
    if (!(t_pk > 0)) throw ConfigError("t_pk must be positive");
    if (!(t_r >= 0)) throw ConfigError("t_r must be non-negative");
}

namespace {

double align_airtime(double airtime, bool align) {
    if (!align) return airtime;
    return std::ceil(airtime / 4.0) * 4.0;  // 4 us OFDM symbols
}

}  // namespace

double packet_duration(int payload_bytes, const PhyConfig& phy) {
    phy.validate();
    if (payload_bytes < 1) throw ConfigError("payload_bytes must be >= 1");
    double airtime = (phy.mac_overhead_bits + 8.0 * payload_bytes) / phy.bitrate;
    return phy.phy_header + align_airtime(airtime, phy.symbol_alignment) +
           phy.signal_extension;
}

double request_duration(const PhyConfig& phy) {
    phy.validate();
    double airtime = phy.request_frame_bits / phy.bitrate;
    return phy.phy_header + align_airtime(airtime, phy.symbol_alignment) +
           phy.signal_extension;
}

TimingModel timing_from_phy(int payload_bytes, const PhyConfig& phy) {
    TimingModel t{packet_duration(payload_bytes, phy), request_duration(phy)};
    t.validate();
    return t;
}

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::SA: return "sa";
        case Protocol::FSA: return "fsa";
        case Protocol::RTA: return "rta";
    }
    return "?";
}

Protocol protocol_from_name(const std::string& name) {
    if (name == "sa" || name == "SA") return Protocol::SA;
    if (name == "fsa" || name == "FSA") return Protocol::FSA;
    if (name == "rta" || name == "RTA") return Protocol::RTA;
    throw ConfigError("unknown protocol: " + name);
}

void ProtocolParams::validate() const {
    if (n_sensors < 1) throw ConfigError("n_sensors must be >= 1");
    if (!(access_prob >= 0.0 && access_prob <= 1.0))
        throw ConfigError("access_prob must lie in [0,1]");
    if (k < 1) throw ConfigError("k must be >= 1");
    if (protocol == Protocol::SA && k != 1)
        throw ConfigError("SA uses k = 1");
    if (!(tx_power >= 0.0)) throw ConfigError("tx_power must be non-negative");
}

ProtocolParams make_params(Protocol protocol, int n_sensors, double access_prob,
                           int k, double tx_power) {
    ProtocolParams p;
    p.protocol = protocol;
    p.n_sensors = n_sensors;
    p.access_prob = access_prob;
    p.k = (protocol == Protocol::SA) ? 1 : k;
    p.tx_power = tx_power;
    p.validate();
    return p;
}

}  // namespace aoi
