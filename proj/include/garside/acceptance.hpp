#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "garside/element.hpp"

namespace garside {

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CriterionResult {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
};

inline constexpr int kCriterionCount = 12;

// Runs one numbered acceptance check (1..12). Library errors other than
// truncation become Fail; CapExceeded becomes Inconclusive.
CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});

// "PASS 3 standard-curve count: ... (0.01 s)"
std::string format_result(const CriterionResult& r);

// Exit status convention shared with the CLI: 0 pass, 1 fail, 3 inconclusive.
int exit_status(CheckStatus s);

// Signed letters (generator, +1/-1).
using SignedWord = std::vector<std::pair<int, int>>;

SignedWord random_signed_word(std::mt19937_64& rng, int rank, int len, double negative_rate);
GarsideElement element_of(const GroupPtr& group, const SignedWord& w);
// Applies one relation-preserving rewrite: insert s^e s^-e, cancel a free
// pair, or apply a braid relation on a same-sign alternating run.
void random_rewrite(std::mt19937_64& rng, const CoxeterGraph& g, SignedWord& w);

}  // namespace garside
