#include "fspg/transport.hpp"

#include <algorithm>
#include <string>

#include "fspg/errors.hpp"

namespace fspg {

RoundMessage answer_request(const ClientNode& node, const RoundMessage& request) {
    if (const auto* gr = std::get_if<GradRequest>(&request)) {
        GradResponse resp;
        resp.client_id = node.client_id();
        resp.k = gr->k;
        resp.gradient = node.local_gradient(gr->w, gr->mu, gr->tau);
        resp.local_loss = node.local_loss(gr->w, gr->mu, gr->tau);
        return resp;
    }
    if (const auto* gv = std::get_if<GramVecRequest>(&request)) {
        GramVecResponse resp;
        resp.client_id = node.client_id();
        resp.round = gv->round;
        resp.product = node.gram_vector_product(gv->v);
        return resp;
    }
    throw ProtocolError("client cannot answer this message type");
}

InprocTransport::InprocTransport(std::vector<ClientNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw ConfigError("transport needs at least one client");
    std::sort(nodes_.begin(), nodes_.end(),
              [](const ClientNode& a, const ClientNode& b) { return a.client_id() < b.client_id(); });
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (nodes_[i].client_id() == nodes_[i - 1].client_id())
            throw ConfigError("duplicate client_id " + std::to_string(nodes_[i].client_id()));
    for (const auto& n : nodes_) {
        if (n.dim() != nodes_.front().dim())
            throw ConfigError("clients disagree on model dimension");
        hellos_.push_back(Hello{n.client_id(), static_cast<std::int64_t>(n.sample_count()),
                                static_cast<std::int64_t>(n.dim()) - 1});
    }
}

RoundMessage InprocTransport::roundtrip(const RoundMessage& request, const ClientNode& node) {
    // Through the codec both ways: bit-exact by the shortest round-trip
    // float representation, and keeps this path equivalent to socket mode.
    auto decoded_req = decode(encode(request));
    ++message_count_;
    RoundMessage resp = answer_request(node, decoded_req->msg);
    auto decoded_resp = decode(encode(resp));
    ++message_count_;
    return decoded_resp->msg;
}

std::vector<GradResponse> InprocTransport::run_grad_round(const GradRequest& req) {
    std::vector<GradResponse> out;
    out.reserve(nodes_.size());
    for (const auto& node : nodes_) {
        RoundMessage m = roundtrip(req, node);
        auto* resp = std::get_if<GradResponse>(&m);
        if (!resp) throw ProtocolError("expected GradResponse");
        if (resp->k != req.k)
            throw ProtocolError("stale GradResponse: round " + std::to_string(resp->k) +
                                " != " + std::to_string(req.k));
        out.push_back(std::move(*resp));
    }
    // nodes_ are already id-sorted; keep the explicit sort as the contract.
    std::sort(out.begin(), out.end(),
              [](const GradResponse& a, const GradResponse& b) { return a.client_id < b.client_id; });
    return out;
}

std::vector<GramVecResponse> InprocTransport::run_gram_round(const GramVecRequest& req) {
    std::vector<GramVecResponse> out;
    out.reserve(nodes_.size());
    for (const auto& node : nodes_) {
        RoundMessage m = roundtrip(req, node);
        auto* resp = std::get_if<GramVecResponse>(&m);
        if (!resp) throw ProtocolError("expected GramVecResponse");
        if (resp->round != req.round) throw ProtocolError("stale GramVecResponse");
        out.push_back(std::move(*resp));
    }
    std::sort(out.begin(), out.end(), [](const GramVecResponse& a, const GramVecResponse& b) {
        return a.client_id < b.client_id;
    });
    return out;
}

void InprocTransport::broadcast_final_model(const FinalModel& msg) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        decode(encode(msg));
        ++message_count_;
    }
}

void InprocTransport::shutdown() {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        decode(encode(Shutdown{}));
        ++message_count_;
    }
}

}  // namespace fspg
