#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidswitch {

/// One letter of a B3 braid word: sigma_index raised to sign (+1 or -1).
class BraidGenerator {
 public:
  BraidGenerator(int index, int sign);

  int index() const { return index_; }
  int sign() const { return sign_; }
  BraidGenerator inverse() const { return {index_, -sign_}; }

  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;

 private:
  int index_;
  int sign_;
};

/// Word in the generators of B3. The empty word is the identity braid.
///
/// Words are plain letter sequences: two words that differ only by adjacent
/// inverse pairs compare unequal until both are passed through free_reduce().
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidGenerator> letters) : letters_(std::move(letters)) {}

  const std::vector<BraidGenerator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const BraidGenerator& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidGenerator> letters_;
};

/// Raised for malformed braid-word text. Carries the offending token and the
/// zero-based character offset where it starts.
class BraidParseError : public std::invalid_argument {
 public:
  BraidParseError(std::string token, std::size_t offset);

  const std::string& token() const { return token_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string token_;
  std::size_t offset_;
};

/// Parses whitespace-separated tokens `1`, `2`, `1'`, `2'` (apostrophe marks
/// an inverse). Blank text is the identity. The result is not reduced.
BraidWord parse_braid_word(std::string_view text);

/// Inverse of parse_braid_word: tokens joined by single spaces.
std::string to_string(const BraidWord& w);

BraidWord free_reduce(const BraidWord& w);
BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& w);
int exponent_sum(const BraidWord& w);

}  // namespace braidswitch
