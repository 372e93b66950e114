#pragma once

// Single-agent decision by dovetailing a verifier for a problem against a
// verifier for its complement. Certificates from {0,1}* are tried in
// length-lexicographic order; each attempt runs one verifier to a private
// verdict, walks the agent home by undoing the recorded entry ports, then
// hands the same certificate to the other side. The first accepting attempt
// decides the run: the accepting side fixes the answer.
//
// The shipped pair decides whether the graph is a tree on exactly x nodes,
// x read from the shared input. The accepting side needs no certificate: a
// closed exclusive-entry walk of 2(x-1) moves is proof by itself. The
// complement side reads the certificate either as a claimed tree size s != x
// to be confirmed by the same walk, or as a guided non-backtracking walk
// that must end on the token resting on the start node, which proves a
// cycle. Runs must seed the token at the agent's start; it is never moved.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maw/protocols/mapping.hpp"
#include "maw/protocols/walks.hpp"
#include "maw/sim.hpp"

namespace maw {

// Certificate with the given position in the length-lexicographic order of
// {0,1}*: rank 0 is the empty string.
inline std::string cert_of_rank(std::int64_t rank) {
  int len = 0;
  std::int64_t base = 0;
  std::int64_t count = 1;
  while (rank >= base + count) {
    base += count;
    count = saturating_mul(count, 2);
    ++len;
  }
  std::int64_t offset = rank - base;
  std::string out(len, '0');
  for (int i = len - 1; i >= 0; --i, offset /= 2)
    if (offset % 2) out[i] = '1';
  return out;
}

inline std::int64_t rank_of_cert(const std::string& cert) {
  if (cert.size() > 60) return kBudgetCap;
  std::int64_t base = 0;
  std::int64_t count = 1;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    base += count;
    count *= 2;
  }
  std::int64_t offset = 0;
  for (char c : cert) offset = offset * 2 + (c == '1');
  return base + offset;
}

struct AttemptAction {
  enum Kind { kMove, kStay, kAccept, kReject };
  Kind kind = kStay;
  int port = 0;

  static AttemptAction move(int p) { return {kMove, p}; }
  static AttemptAction stay() { return {kStay, 0}; }
  static AttemptAction accept() { return {kAccept, 0}; }
  static AttemptAction reject() { return {kReject, 0}; }
};

// One verifier side of a dovetailed attempt. reset begins a fresh attempt;
// step is called once per round until it accepts or rejects.
class CertVerifier {
 public:
  virtual ~CertVerifier() = default;
  virtual void reset(const std::string& cert, const std::string& input) = 0;
  virtual AttemptAction step(const Observation& obs) = 0;
  virtual std::unique_ptr<CertVerifier> clone() const = 0;
};

// Accepting side for tree-size: run the exclusive-entry walk; closing at
// exactly 2(x-1) moves proves a tree on x nodes. Ignores the certificate.
class TreesizeYesVerifier final : public CertVerifier {
 public:
  void reset(const std::string&, const std::string& input) override {
    walk_ = TreeWalk();
    auto x = decode_small_uint(input);
    x_ = x && *x >= 1 ? *x : -1;
  }

  AttemptAction step(const Observation& obs) override {
    if (x_ < 0) return AttemptAction::reject();
    if (auto p = walk_.step(obs.degree, obs.entry_port)) {
      if (walk_.moves() > 2 * (x_ - 1)) return AttemptAction::reject();
      return AttemptAction::move(*p);
    }
    if (walk_.finished() && walk_.moves() == 2 * (x_ - 1)) return AttemptAction::accept();
    return AttemptAction::reject();
  }

  std::unique_ptr<CertVerifier> clone() const override {
    return std::make_unique<TreesizeYesVerifier>(*this);
  }

 private:
  TreeWalk walk_;
  std::int64_t x_ = -1;
};

// Complement side for tree-size. Certificate "0" + bits claims the graph is
// a tree on s = bits + 1 nodes with s != x, confirmed by the closing move
// count of the exclusive-entry walk. Certificate "1" + bits drives a
// non-backtracking walk, one port digit per step in mixed radix over the
// legal ports; if the walk ends on the token left at the start it is a
// closed non-backtracking walk, which no tree admits.
class TreesizeNoVerifier final : public CertVerifier {
 public:
  void reset(const std::string& cert, const std::string& input) override {
    auto x = decode_small_uint(input);
    x_ = x && *x >= 1 ? *x : -1;
    mode_ = 0;
    steps_ = 0;
    walk_ = TreeWalk();
    if (x_ < 0 || cert.empty()) return;
    std::string rest = cert.substr(1);
    if (cert[0] == '0') {
      if (rest.size() > 60) return;
      std::int64_t v = 0;
      for (char c : rest) v = v * 2 + (c == '1');
      claim_ = v + 1;
      if (claim_ != x_) mode_ = 1;
    } else {
      witness_ = rank_of_cert(rest);
      if (witness_ > 0 && witness_ < kBudgetCap) mode_ = 2;
    }
  }

  AttemptAction step(const Observation& obs) override {
    if (mode_ == 1) {
      if (auto p = walk_.step(obs.degree, obs.entry_port)) {
        if (walk_.moves() > 2 * (claim_ - 1)) return AttemptAction::reject();
        return AttemptAction::move(*p);
      }
      if (walk_.finished() && walk_.moves() == 2 * (claim_ - 1)) return AttemptAction::accept();
      return AttemptAction::reject();
    }
    if (mode_ == 2) {
      if (witness_ == 0) {
        if (steps_ > 0 && obs.token_here) return AttemptAction::accept();
        return AttemptAction::reject();
      }
      int barred = steps_ > 0 ? obs.entry_port : 0;
      int legal = obs.degree - (barred > 0 ? 1 : 0);
      if (legal <= 0) return AttemptAction::reject();
      std::int64_t digit = (witness_ - 1) % legal;
      witness_ = (witness_ - 1) / legal;
      int port = 0;
      for (int p = 1; p <= obs.degree; ++p) {
        if (p == barred) continue;
        if (digit-- == 0) {
          port = p;
          break;
        }
      }
      ++steps_;
      return AttemptAction::move(port);
    }
    return AttemptAction::reject();
  }

  std::unique_ptr<CertVerifier> clone() const override {
    return std::make_unique<TreesizeNoVerifier>(*this);
  }

 private:
  std::int64_t x_ = -1;
  int mode_ = 0;  // 0 reject, 1 size claim, 2 walk witness
  std::int64_t claim_ = 0;
  std::int64_t witness_ = 0;
  std::int64_t steps_ = 0;
  TreeWalk walk_;
};

// Rejects every attempt; dovetailing two of these exhausts the budget.
class RejectAllVerifier final : public CertVerifier {
 public:
  void reset(const std::string&, const std::string&) override {}
  AttemptAction step(const Observation&) override { return AttemptAction::reject(); }
  std::unique_ptr<CertVerifier> clone() const override {
    return std::make_unique<RejectAllVerifier>(*this);
  }
};

struct DovetailMemory final : AgentMemory {
  std::string input;
  std::int64_t attempt = 0;
  std::string cert;
  int mode = 0;  // 0 yes attempt, 1 walk home, 2 no attempt, 3 walk home
  bool moved = false;
  std::vector<int> entries;  // entry ports recorded during the attempt
  std::unique_ptr<CertVerifier> yes;
  std::unique_ptr<CertVerifier> no;

  std::unique_ptr<AgentMemory> clone() const override {
    auto m = std::make_unique<DovetailMemory>(input, attempt, cert, mode, moved,
                                              entries, yes->clone(), no->clone());
    return m;
  }

  DovetailMemory() = default;
  DovetailMemory(std::string in, std::int64_t at, std::string ce, int mo, bool mv,
                 std::vector<int> en, std::unique_ptr<CertVerifier> y,
                 std::unique_ptr<CertVerifier> n)
      : input(std::move(in)),
        attempt(at),
        cert(std::move(ce)),
        mode(mo),
        moved(mv),
        entries(std::move(en)),
        yes(std::move(y)),
        no(std::move(n)) {}
};

class DovetailProtocol final : public Protocol {
 public:
  using VerifierFactory = std::unique_ptr<CertVerifier> (*)();

  DovetailProtocol()
      : make_yes_([]() -> std::unique_ptr<CertVerifier> {
          return std::make_unique<TreesizeYesVerifier>();
        }),
        make_no_([]() -> std::unique_ptr<CertVerifier> {
          return std::make_unique<TreesizeNoVerifier>();
        }) {}
  DovetailProtocol(VerifierFactory yes, VerifierFactory no)
      : make_yes_(yes), make_no_(no) {}

  std::unique_ptr<AgentMemory> make_memory(const AgentSetup& setup) const override {
    auto m = std::make_unique<DovetailMemory>();
    m->input = setup.input;
    m->yes = make_yes_();
    m->no = make_no_();
    m->cert = cert_of_rank(0);
    m->yes->reset(m->cert, m->input);
    return m;
  }

  Action step(AgentMemory& memory, const Observation& obs) const override {
    auto& m = static_cast<DovetailMemory&>(memory);
    if (m.moved) {
      m.moved = false;
      if (m.mode == 0 || m.mode == 2) m.entries.push_back(obs.entry_port);
    }
    for (;;) {
      if (m.mode == 0 || m.mode == 2) {
        CertVerifier& v = m.mode == 0 ? *m.yes : *m.no;
        AttemptAction a = v.step(obs);
        if (a.kind == AttemptAction::kAccept) return Action::decide(m.mode == 0);
        if (a.kind == AttemptAction::kMove) {
          m.moved = true;
          return Action::move(a.port);
        }
        if (a.kind == AttemptAction::kStay) return Action::stay();
        ++m.mode;
        continue;
      }
      if (!m.entries.empty()) {
        int back = m.entries.back();
        m.entries.pop_back();
        return Action::move(back);
      }
      if (m.mode == 1) {
        m.mode = 2;
        m.no->reset(m.cert, m.input);
        continue;
      }
      ++m.attempt;
      m.cert = cert_of_rank(m.attempt);
      m.mode = 0;
      m.yes->reset(m.cert, m.input);
      return Action::stay();  // one round per attempt, even if both sides bail
    }
  }

 private:
  VerifierFactory make_yes_;
  VerifierFactory make_no_;
};

// Rounds by which the tree-size dovetail must have decided: the cycle
// witness is the last resort and its certificate rank is bounded by the
// walk-digit count, everything else accepts earlier.
inline std::int64_t dovetail_budget(int n, int max_degree, std::int64_t x) {
  std::int64_t attempts =
      saturating_mul(8, saturating_pow(std::max(2, max_degree), 2 * n));
  std::int64_t per = saturating_add(4 * saturating_add(x, 2),
                                    static_cast<std::int64_t>(4 * n + 16));
  return saturating_add(saturating_mul(attempts, per), 256);
}

}  // namespace maw
