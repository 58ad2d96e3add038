#include "braidswitch/braid_word.hpp"

#include <cctype>

namespace braidswitch {

BraidGenerator::BraidGenerator(int index, int sign) : index_(index), sign_(sign) {
  if (index != 1 && index != 2) {
    throw std::invalid_argument("B3 generator index must be 1 or 2, got " + std::to_string(index));
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("generator sign must be +1 or -1, got " + std::to_string(sign));
  }
}

BraidParseError::BraidParseError(std::string token, std::size_t offset)
    : std::invalid_argument("invalid braid token '" + token + "' at offset " + std::to_string(offset) +
                            " (expected 1, 2, 1' or 2')"),
      token_(std::move(token)),
      offset_(offset) {}

BraidWord parse_braid_word(std::string_view text) {
  std::vector<BraidGenerator> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    const std::string_view tok = text.substr(start, i - start);
    const bool inverse = tok.size() == 2 && tok[1] == '\'';
    if ((tok.size() != 1 && !inverse) || (tok[0] != '1' && tok[0] != '2')) {
      throw BraidParseError(std::string(tok), start);
    }
    letters.emplace_back(tok[0] - '0', inverse ? -1 : 1);
  }
  return BraidWord(std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>('0' + g.index());
    if (g.sign() < 0) out += '\'';
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  // Single left-to-right pass with a stack reaches the fully reduced word.
  std::vector<BraidGenerator> stack;
  stack.reserve(w.size());
  for (const auto& g : w) {
    if (!stack.empty() && stack.back() == g.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return BraidWord(std::move(stack));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  std::vector<BraidGenerator> letters = u.letters();
  letters.insert(letters.end(), v.begin(), v.end());
  return BraidWord(std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<BraidGenerator> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(std::move(letters));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (const auto& g : w) sum += g.sign();
  return sum;
}

}  // namespace braidswitch
