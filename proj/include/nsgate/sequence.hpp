#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsgate/errors.hpp"

namespace nsgate {

// One beam-splitter-plus-detection element: k photons injected into the
// auxiliary mode, n detected at its output.
struct ElementSpec {
  int injected = 0;
  int detected = 0;

  friend bool operator==(const ElementSpec&, const ElementSpec&) = default;
};

// Ordered list of elements.  Construction checks that the running offset
// (starting at start_offset, shifted by k - n per element) never goes
// negative and that no element detects more photons than its stage can
// offer.  Gate sequences start at offset 0; correction pairs, which run
// after the photon-adding error element, start at offset 1.
class SequenceSpec {
 public:
  SequenceSpec() = default;
  explicit SequenceSpec(std::vector<ElementSpec> elements,
                        int start_offset = 0);
  SequenceSpec(std::initializer_list<ElementSpec> elements);

  // Grammar: comma-separated parenthesized pairs, whitespace-insensitive,
  // e.g. "(1,1),(0,0)".  Errors carry the offending character offset.
  static SequenceSpec parse(std::string_view text);

  const std::vector<ElementSpec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const ElementSpec& operator[](std::size_t i) const { return elements_[i]; }

  // Offset seen by element i as its input.
  int offset_before(std::size_t i) const;
  int start_offset() const { return start_offset_; }
  int net_offset() const { return net_offset_; }

  std::string str() const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  void validate() const;

  std::vector<ElementSpec> elements_;
  int start_offset_ = 0;
  int net_offset_ = 0;
};

}  // namespace nsgate
