#include "convcodes/codes.hpp"

#include <string>

#include "convcodes/error.hpp"

namespace convcodes {

Codeword to_received(std::span<const Elem> symbols) { return Codeword(symbols.begin(), symbols.end()); }

SystematicCode::SystematicCode(Matrix parity) : parity_(std::move(parity)) {
  if (parity_.rows() == 0 || parity_.cols() == 0) {
    throw Error(ErrorCode::BadCode, "parity matrix must be at least 1x1");
  }
}

std::vector<Elem> SystematicCode::encode(std::span<const Elem> message) const {
  if (message.size() != k()) {
    throw Error(ErrorCode::LengthMismatch,
                "message has " + std::to_string(message.size()) + " symbols, code expects " + std::to_string(k()));
  }
  const Field& f = *field();
  std::vector<Elem> codeword(message.begin(), message.end());
  codeword.reserve(n());
  for (std::size_t j = 0; j < r(); ++j) {
    Elem acc = f.zero();
    for (std::size_t i = 0; i < k(); ++i) acc = f.add(acc, f.mul(message[i], parity_.at(i, j)));
    codeword.push_back(acc);
  }
  return codeword;
}

std::vector<Elem> SystematicCode::decode(const Codeword& received) const {
  if (received.size() != n()) {
    throw Error(ErrorCode::LengthMismatch,
                "received word has " + std::to_string(received.size()) + " symbols, code length is " +
                    std::to_string(n()));
  }
  const Field& f = *field();
  std::size_t present = 0;
  for (const auto& s : received) {
    if (s) {
      f.elem(s->value);
      ++present;
    }
  }
  if (present < k()) {
    throw Error(ErrorCode::TooFewSymbols,
                std::to_string(present) + " symbols survive, " + std::to_string(k()) + " needed");
  }

  std::vector<Elem> message(k());
  std::vector<std::size_t> erased;
  for (std::size_t i = 0; i < k(); ++i) {
    if (received[i]) {
      message[i] = *received[i];
    } else {
      erased.push_back(i);
    }
  }
  if (erased.empty()) return message;

  std::vector<std::size_t> parity_cols;
  for (std::size_t j = 0; j < r() && parity_cols.size() < erased.size(); ++j) {
    if (received[k() + j]) parity_cols.push_back(j);
  }

  // Row a of the system: parity column parity_cols[a] restricted to erased data.
  const std::size_t u = erased.size();
  Matrix system(field(), u, u);
  std::vector<Elem> rhs(u);
  for (std::size_t a = 0; a < u; ++a) {
    const std::size_t j = parity_cols[a];
    Elem value = *received[k() + j];
    for (std::size_t i = 0; i < k(); ++i) {
      if (received[i]) value = f.sub(value, f.mul(message[i], parity_.at(i, j)));
    }
    rhs[a] = value;
    for (std::size_t b = 0; b < u; ++b) system.set(a, b, parity_.at(erased[b], j));
  }
  auto solved = solve_linear(system, rhs);
  if (!solved) {
    throw Error(ErrorCode::SingularSubsystem, "surviving parities are linearly dependent on the erased data");
  }
  for (std::size_t b = 0; b < u; ++b) message[erased[b]] = (*solved)[b];
  return message;
}

bool SystematicCode::is_mds() const { return is_super_regular(parity_, true); }

}  // namespace convcodes
