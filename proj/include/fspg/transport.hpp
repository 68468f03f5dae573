#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fspg/client_node.hpp"
#include "fspg/message.hpp"

namespace fspg {

// Synchronous round transport between the coordinator and its clients.
// run_round broadcasts one request and blocks until exactly one response per
// registered client has arrived; responses come back sorted by client_id, so
// aggregation is independent of arrival order.
class RoundTransport {
public:
    virtual ~RoundTransport() = default;

    virtual const std::vector<Hello>& clients() const = 0;

    virtual std::vector<GradResponse> run_grad_round(const GradRequest& req) = 0;
    virtual std::vector<GramVecResponse> run_gram_round(const GramVecRequest& req) = 0;

    // Fire-and-forget broadcasts used at the end of a run.
    virtual void broadcast_final_model(const FinalModel& msg) = 0;
    virtual void shutdown() = 0;

    std::int64_t total_samples() const {
        std::int64_t n = 0;
        for (const auto& h : clients()) n += h.sample_count;
        return n;
    }
    std::size_t model_dim() const {
        return clients().empty() ? 0 : static_cast<std::size_t>(clients().front().feature_dim) + 1;
    }
};

// Runs each client in-process. Every message still passes through
// encode/decode, so the numeric path is identical to the socket transport.
class InprocTransport : public RoundTransport {
public:
    explicit InprocTransport(std::vector<ClientNode> nodes);

    const std::vector<Hello>& clients() const override { return hellos_; }
    std::vector<GradResponse> run_grad_round(const GradRequest& req) override;
    std::vector<GramVecResponse> run_gram_round(const GramVecRequest& req) override;
    void broadcast_final_model(const FinalModel& msg) override;
    void shutdown() override;

    // Messages exchanged so far (both directions); used by tests.
    std::int64_t message_count() const { return message_count_; }

private:
    RoundMessage roundtrip(const RoundMessage& request, const ClientNode& node);

    std::vector<ClientNode> nodes_;  // sorted by client_id
    std::vector<Hello> hellos_;
    std::int64_t message_count_ = 0;
};

// Serves one request against a local node; shared by the in-process transport
// and the socket client loop.
RoundMessage answer_request(const ClientNode& node, const RoundMessage& request);

}  // namespace fspg
