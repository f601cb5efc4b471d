#include "nsgate/sequence.hpp"

#include <cctype>

namespace nsgate {

SequenceSpec::SequenceSpec(std::vector<ElementSpec> elements, int start_offset)
    : elements_(std::move(elements)), start_offset_(start_offset) {
  if (start_offset_ < 0) {
    throw std::invalid_argument("start offset must be non-negative");
  }
  validate();
  for (const auto& e : elements_) net_offset_ += e.injected - e.detected;
}

SequenceSpec::SequenceSpec(std::initializer_list<ElementSpec> elements)
    : SequenceSpec(std::vector<ElementSpec>(elements)) {}

void SequenceSpec::validate() const {
  int offset = start_offset_;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    if (e.injected < 0 || e.detected < 0) {
      throw std::invalid_argument("element photon counts must be non-negative");
    }
    if (e.detected > e.injected + offset + 2) {
      throw InvalidDetectionError("element " + std::to_string(i + 1) +
                                  " detects more photons than available");
    }
    offset += e.injected - e.detected;
    if (offset < 0) {
      throw LossyBranchError("running offset goes negative at element " +
                             std::to_string(i + 1));
    }
  }
}

int SequenceSpec::offset_before(std::size_t i) const {
  int offset = start_offset_;
  for (std::size_t j = 0; j < i && j < elements_.size(); ++j) {
    offset += elements_[j].injected - elements_[j].detected;
  }
  return offset;
}

std::string SequenceSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += '(';
    out += std::to_string(elements_[i].injected);
    out += ',';
    out += std::to_string(elements_[i].detected);
    out += ')';
  }
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError(std::string("expected '") + c + "', found end of input",
                       pos_);
    }
    if (text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "', found '" +
                           text_[pos_] + "'",
                       pos_);
    }
    ++pos_;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected a non-negative integer", start);
    }
    int value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1000) throw ParseError("photon count out of range", start);
    }
    return value;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SequenceSpec SequenceSpec::parse(std::string_view text) {
  Scanner scan(text);
  std::vector<ElementSpec> elements;
  if (scan.done()) throw ParseError("empty sequence", 0);
  while (true) {
    scan.expect('(');
    ElementSpec e;
    e.injected = scan.integer();
    scan.expect(',');
    e.detected = scan.integer();
    scan.expect(')');
    elements.push_back(e);
    if (scan.done()) break;
    scan.expect(',');
  }
  return SequenceSpec(std::move(elements));
}

}  // namespace nsgate
