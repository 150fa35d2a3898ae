#pragma once

#include <string>

#include "tbw/agents.hpp"
#include "tbw/protocol.hpp"

namespace tbw {

struct SpawnError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A line-oriented child process: write a message, read one reply line
/// under a deadline. Teardown (EOF + SIGKILL + reap) is guaranteed by the
/// destructor.
class BotProcess {
public:
    explicit BotProcess(const std::string& command);
    ~BotProcess();
    BotProcess(const BotProcess&) = delete;
    BotProcess& operator=(const BotProcess&) = delete;

    enum class ReadStatus { Ok, Timeout, Eof };

    /// False once the pipe broke (bot exited or crashed).
    bool write_text(const std::string& text);
    ReadStatus read_line(std::string& out, Deadline deadline);

    void shutdown();

private:
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string buffer_;
};

/// Referee-side adapter running an external bot under the wire protocol:
/// header on start, draft/battle messages per turn, one reply line within
/// the budget. A timeout scores a strike and plays as "no orders" / the
/// default pick; stale late replies are discarded; 3 strikes forfeit, a
/// dead pipe forfeits as a crash.
class ExternalBotAgent final : public Agent {
public:
    explicit ExternalBotAgent(std::string command, int max_strikes = 3);

    std::string_view name() const override { return "bot"; }
    void start_match(const MatchContext& ctx) override;
    DraftPick draft_pick(const DraftObservation& obs, Deadline deadline) override;
    std::vector<Order> act(const Observation& obs, Deadline deadline) override;
    Health health() const override;

    int strikes() const { return strikes_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    enum class AskResult { Ok, Failed };
    AskResult ask(const std::string& message, Deadline deadline, std::string& reply);

    std::string command_;
    int max_strikes_;
    std::unique_ptr<BotProcess> process_;
    int strikes_ = 0;
    int stale_replies_owed_ = 0;
    bool crashed_ = false;
    std::vector<std::string> warnings_;
};

}  // namespace tbw
