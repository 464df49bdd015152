#pragma once

#include <string>

#include "aoi/errors.hpp"

namespace aoi {

// PHY-layer constants used to derive frame durations. Defaults follow the
// 802.11-style parameter set: 6 Mbps control rate, 20 us PHY preamble+header,
// 246 bits of MAC header + PHY pad, 6 us signal extension, 160-bit request
// frame. With symbol_alignment set, airtime is rounded up to 4 us OFDM
// symbol boundaries.
struct PhyConfig {
    double bitrate = 6.0;            // bits per microsecond (6 = 6 Mbps)
    double phy_header = 20.0;        // microseconds
    double mac_overhead_bits = 246;  // MAC header + PHY pad, bits
    double signal_extension = 6.0;   // microseconds
    double request_frame_bits = 160; // bits
    bool symbol_alignment = false;   // round airtime up to 4 us symbols

    void validate() const;
};

// Load a PhyConfig from a JSON file holding any subset of the field names
// above; missing fields keep their defaults.
PhyConfig load_phy_config(const std::string& path);

// Derived frame durations in microseconds.
struct TimingModel {
    double t_pk = 1.0;  // update-packet duration T_pk
    double t_r = 1.0;   // request-frame duration T_r

    void validate() const;
};

// Duration of an update packet carrying `payload_bytes` of payload.
double packet_duration(int payload_bytes, const PhyConfig& phy);

// Duration of a request frame.
double request_duration(const PhyConfig& phy);

// TimingModel with both durations derived from the PHY constants.
TimingModel timing_from_phy(int payload_bytes, const PhyConfig& phy);

enum class Protocol { SA, FSA, RTA };

const char* protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

// One protocol operating point.
struct ProtocolParams {
    Protocol protocol = Protocol::SA;
    int n_sensors = 1;         // N
    double access_prob = 1.0;  // q (SA), omega (FSA), pi (RTA)
    int k = 1;                 // slots per frame / request slots per round
    double tx_power = 1.0;     // nominal constant transmit power P

    void validate() const;
};

// Validated ProtocolParams; k is forced to 1 for SA.
ProtocolParams make_params(Protocol protocol, int n_sensors, double access_prob,
                           int k = 1, double tx_power = 1.0);

}  // namespace aoi
