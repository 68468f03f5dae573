#include "fspg/message.hpp"

#include <cmath>
#include <cstring>

#include <json.hpp>

#include "fspg/errors.hpp"

namespace fspg {

using ojson = nlohmann::ordered_json;

namespace {

void require_finite(double x, const char* field) {
    if (!std::isfinite(x)) throw EncodeError(std::string("non-finite float in field ") + field);
}

ojson vec_to_json(const Vec& v, const char* field) {
    for (double x : v) require_finite(x, field);
    return ojson(v);
}

Vec vec_from_json(const ojson& j, const char* field) {
    if (!j.is_array()) throw ProtocolError(std::string("field ") + field + " must be an array");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw ProtocolError(std::string("field ") + field + " has a non-numeric entry");
        v.push_back(e.get<double>());
    }
    return v;
}

template <typename T>
T field(const ojson& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ProtocolError(std::string("missing field ") + name);
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ProtocolError(std::string("field ") + name + " has wrong type");
    }
}

Vec vec_field(const ojson& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ProtocolError(std::string("missing field ") + name);
    return vec_from_json(*it, name);
}

std::string frame(const ojson& body) {
    std::string payload = body.dump();
    if (payload.size() > kFrameCapBytes)
        throw EncodeError("frame exceeds cap: " + std::to_string(payload.size()) + " bytes");
    std::uint32_t n = static_cast<std::uint32_t>(payload.size());
    std::string out;
    out.resize(4 + payload.size());
    out[0] = static_cast<char>((n >> 24) & 0xff);
    out[1] = static_cast<char>((n >> 16) & 0xff);
    out[2] = static_cast<char>((n >> 8) & 0xff);
    out[3] = static_cast<char>(n & 0xff);
    std::memcpy(out.data() + 4, payload.data(), payload.size());
    return out;
}

}  // namespace

std::string encode(const RoundMessage& msg) {
    ojson j;
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Hello>) {
                j["type"] = "Hello";
                j["client_id"] = m.client_id;
                j["sample_count"] = m.sample_count;
                j["feature_dim"] = m.feature_dim;
            } else if constexpr (std::is_same_v<M, GradRequest>) {
                require_finite(m.mu, "mu");
                require_finite(m.tau, "tau");
                j["type"] = "GradRequest";
                j["k"] = m.k;
                j["w"] = vec_to_json(m.w, "w");
                j["mu"] = m.mu;
                j["tau"] = m.tau;
            } else if constexpr (std::is_same_v<M, GradResponse>) {
                require_finite(m.local_loss, "local_loss");
                j["type"] = "GradResponse";
                j["client_id"] = m.client_id;
                j["k"] = m.k;
                j["gradient"] = vec_to_json(m.gradient, "gradient");
                j["local_loss"] = m.local_loss;
            } else if constexpr (std::is_same_v<M, GramVecRequest>) {
                j["type"] = "GramVecRequest";
                j["round"] = m.round;
                j["v"] = vec_to_json(m.v, "v");
            } else if constexpr (std::is_same_v<M, GramVecResponse>) {
                j["type"] = "GramVecResponse";
                j["client_id"] = m.client_id;
                j["round"] = m.round;
                j["product"] = vec_to_json(m.product, "product");
            } else if constexpr (std::is_same_v<M, FinalModel>) {
                j["type"] = "FinalModel";
                j["w"] = vec_to_json(m.w, "w");
            } else if constexpr (std::is_same_v<M, Shutdown>) {
                j["type"] = "Shutdown";
            }
        },
        msg);
    return frame(j);
}

std::optional<DecodeResult> decode(std::string_view buf) {
    if (buf.size() < 4) return std::nullopt;
    std::uint32_t n = (static_cast<std::uint32_t>(static_cast<unsigned char>(buf[0])) << 24) |
                      (static_cast<std::uint32_t>(static_cast<unsigned char>(buf[1])) << 16) |
                      (static_cast<std::uint32_t>(static_cast<unsigned char>(buf[2])) << 8) |
                      static_cast<std::uint32_t>(static_cast<unsigned char>(buf[3]));
    if (n > kFrameCapBytes)
        throw ProtocolError("declared frame length " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kFrameCapBytes));
    if (buf.size() < 4 + static_cast<std::size_t>(n)) return std::nullopt;

    std::string_view body = buf.substr(4, n);
    ojson j;
    try {
        j = ojson::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProtocolError("malformed JSON body at byte offset " + std::to_string(e.byte) + ": " +
                            e.what());
    }
    if (!j.is_object()) throw ProtocolError("message body must be a JSON object");
    std::string type = field<std::string>(j, "type");

    RoundMessage msg;
    if (type == "Hello") {
        msg = Hello{field<int>(j, "client_id"), field<std::int64_t>(j, "sample_count"),
                    field<std::int64_t>(j, "feature_dim")};
    } else if (type == "GradRequest") {
        msg = GradRequest{field<std::int64_t>(j, "k"), vec_field(j, "w"), field<double>(j, "mu"),
                          field<double>(j, "tau")};
    } else if (type == "GradResponse") {
        msg = GradResponse{field<int>(j, "client_id"), field<std::int64_t>(j, "k"),
                           vec_field(j, "gradient"), field<double>(j, "local_loss")};
    } else if (type == "GramVecRequest") {
        msg = GramVecRequest{field<std::int64_t>(j, "round"), vec_field(j, "v")};
    } else if (type == "GramVecResponse") {
        msg = GramVecResponse{field<int>(j, "client_id"), field<std::int64_t>(j, "round"),
                              vec_field(j, "product")};
    } else if (type == "FinalModel") {
        msg = FinalModel{vec_field(j, "w")};
    } else if (type == "Shutdown") {
        msg = Shutdown{};
    } else {
        throw ProtocolError("unknown message type '" + type + "' at byte offset 4");
    }
    return DecodeResult{std::move(msg), 4 + static_cast<std::size_t>(n)};
}

}  // namespace fspg
