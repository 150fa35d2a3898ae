#include "tbw/botproc.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace tbw {

BotProcess::BotProcess(const std::string& command) {
    int in_pipe[2];   // referee -> bot
    int out_pipe[2];  // bot -> referee
    if (pipe(in_pipe) != 0) throw SpawnError("pipe failed: " + std::string(strerror(errno)));
    if (pipe(out_pipe) != 0) {
        close(in_pipe[0]);
        close(in_pipe[1]);
        throw SpawnError("pipe failed: " + std::string(strerror(errno)));
    }
    pid_ = fork();
    if (pid_ < 0) {
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
        throw SpawnError("fork failed: " + std::string(strerror(errno)));
    }
    if (pid_ == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
    fcntl(from_child_, F_SETFL, O_NONBLOCK);
    signal(SIGPIPE, SIG_IGN);  // broken bot pipes surface as write errors
}

BotProcess::~BotProcess() { shutdown(); }

void BotProcess::shutdown() {
    if (to_child_ >= 0) {
        close(to_child_);
        to_child_ = -1;
    }
    if (from_child_ >= 0) {
        close(from_child_);
        from_child_ = -1;
    }
    if (pid_ > 0) {
        kill(pid_, SIGKILL);
        waitpid(pid_, nullptr, 0);
        pid_ = -1;
    }
}

bool BotProcess::write_text(const std::string& text) {
    if (to_child_ < 0) return false;
    size_t off = 0;
    while (off < text.size()) {
        ssize_t n = write(to_child_, text.data() + off, text.size() - off);
        if (n < 0) {
            if (errno == EINTR) continue;
            return false;
        }
        off += static_cast<size_t>(n);
    }
    return true;
}

BotProcess::ReadStatus BotProcess::read_line(std::string& out, Deadline deadline) {
    while (true) {
        if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
            out = buffer_.substr(0, nl);
            if (!out.empty() && out.back() == '\r') out.pop_back();
            buffer_.erase(0, nl + 1);
            return ReadStatus::Ok;
        }
        if (from_child_ < 0) return ReadStatus::Eof;
        auto now = Clock::now();
        if (now >= deadline) return ReadStatus::Timeout;
        auto wait_ms = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
        struct pollfd pfd {
            from_child_, POLLIN, 0
        };
        int pr = poll(&pfd, 1, static_cast<int>(wait_ms.count()) + 1);
        if (pr < 0) {
            if (errno == EINTR) continue;
            return ReadStatus::Eof;
        }
        if (pr == 0) return ReadStatus::Timeout;
        char chunk[4096];
        ssize_t n = read(from_child_, chunk, sizeof chunk);
        if (n > 0) {
            buffer_.append(chunk, static_cast<size_t>(n));
        } else if (n == 0) {
            close(from_child_);  // child is gone; a partial line is no reply
            from_child_ = -1;
            return ReadStatus::Eof;
        } else if (errno != EAGAIN && errno != EWOULDBLOCK && errno != EINTR) {
            return ReadStatus::Eof;
        }
    }
}

ExternalBotAgent::ExternalBotAgent(std::string command, int max_strikes)
    : command_(std::move(command)), max_strikes_(max_strikes) {}

void ExternalBotAgent::start_match(const MatchContext& ctx) {
    Agent::start_match(ctx);
    strikes_ = 0;
    stale_replies_owed_ = 0;
    crashed_ = false;
    warnings_.clear();
    try {
        process_ = std::make_unique<BotProcess>(command_);
    } catch (const SpawnError& e) {
        crashed_ = true;
        warnings_.push_back(e.what());
        return;
    }
    if (!process_->write_text(encode_match_header(ctx.config, ctx.player) + "\n")) crashed_ = true;
}

Agent::Health ExternalBotAgent::health() const {
    if (crashed_) return Health::Crashed;
    if (strikes_ >= max_strikes_) return Health::ForfeitStrikes;
    return Health::Ok;
}

ExternalBotAgent::AskResult ExternalBotAgent::ask(const std::string& message, Deadline deadline,
                                                  std::string& reply) {
    if (!process_ || crashed_) return AskResult::Failed;
    // Flush any late replies from previously struck turns that already
    // arrived, so an old answer is never mistaken for this turn's.
    std::string stale;
    while (stale_replies_owed_ > 0 &&
           process_->read_line(stale, Clock::now()) == BotProcess::ReadStatus::Ok)
        --stale_replies_owed_;
    if (!process_->write_text(message)) {
        crashed_ = true;
        warnings_.push_back("bot pipe closed");
        return AskResult::Failed;
    }
    while (true) {
        switch (process_->read_line(reply, deadline)) {
            case BotProcess::ReadStatus::Ok:
                if (stale_replies_owed_ > 0) {
                    --stale_replies_owed_;
                    continue;  // discard, keep waiting for the real reply
                }
                return AskResult::Ok;
            case BotProcess::ReadStatus::Timeout:
                ++strikes_;
                ++stale_replies_owed_;
                warnings_.push_back("turn budget exceeded (strike " + std::to_string(strikes_) +
                                    ")");
                return AskResult::Failed;
            case BotProcess::ReadStatus::Eof:
                crashed_ = true;
                warnings_.push_back("bot exited mid-match");
                return AskResult::Failed;
        }
    }
}

DraftPick ExternalBotAgent::draft_pick(const DraftObservation& obs, Deadline deadline) {
    std::string reply;
    if (ask(encode_draft_observation(obs), deadline, reply) == AskResult::Ok) {
        try {
            return parse_draft_pick(reply);
        } catch (const ParseError& e) {
            warnings_.push_back(e.what());
        }
    }
    // Deliberately illegal: the draft rules substitute the default pick.
    return {UnitType::Swordsmen, {-1.0, -1.0}};
}

std::vector<Order> ExternalBotAgent::act(const Observation& obs, Deadline deadline) {
    std::string reply;
    if (ask(encode_battle_observation(obs), deadline, reply) != AskResult::Ok) return {};
    try {
        return parse_action_string(reply);
    } catch (const ParseError& e) {
        warnings_.push_back(e.what());
        return {};
    }
}

}  // namespace tbw
