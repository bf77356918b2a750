#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sturm {

// Default cap on how far operations extend a stream before giving up;
// overridable per call and, in the CLI, via STURM_BUDGET.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

// Lazily extensible prefix of an infinite binary word over '0'/'1'.
// A stream is a shared handle to one growable buffer plus an extender
// that appends letters on demand; copies alias the same buffer.  Derived
// streams (images, derivated words, desubstitutions) capture their source
// handle, so a chain extends transparently.  A stream and its derivations
// must be driven from one thread of control at a time.
class WordStream {
 public:
  // Must append at least one letter per call until buf.size() >= want.
  using Extender = std::function<void(std::string& buf, std::size_t want)>;

  WordStream(std::string label, Extender extend)
      : impl_(std::make_shared<Impl>(
            Impl{std::move(label), {}, std::move(extend)})) {}

  static WordStream periodic(std::string label, std::string block) {
    if (block.empty()) throw std::invalid_argument("empty period block");
    return WordStream(std::move(label),
                      [block = std::move(block)](std::string& buf,
                                                 std::size_t want) {
                        while (buf.size() < want)
                          buf.push_back(block[buf.size() % block.size()]);
                      });
  }

  static WordStream constant(char letter) {
    return periodic(std::string(1, letter), std::string(1, letter));
  }

  const std::string& label() const { return impl_->label; }
  std::size_t generated() const { return impl_->buf.size(); }

  void ensure(std::size_t n) {
    auto& buf = impl_->buf;
    while (buf.size() < n) {
      const std::size_t before = buf.size();
      impl_->extend(buf, n);
      if (buf.size() <= before)
        throw std::logic_error("stream extender did not produce letters");
    }
  }

  char operator[](std::size_t i) {
    ensure(i + 1);
    return impl_->buf[i];
  }

  std::string prefix(std::size_t n) {
    ensure(n);
    return impl_->buf.substr(0, n);
  }

  // View into the internal buffer; invalidated by the next extension.
  std::string_view view(std::size_t n) {
    ensure(n);
    return std::string_view(impl_->buf).substr(0, n);
  }

 private:
  struct Impl {
    std::string label;
    std::string buf;
    Extender extend;
  };
  std::shared_ptr<Impl> impl_;
};

// Prefix comparison used whenever words are identified up to the letter
// exchange 0 <-> 1.
inline bool equal_prefix(WordStream a, WordStream b, std::size_t len) {
  return a.view(len) == b.view(len);
}

inline bool equal_prefix_up_to_exchange(WordStream a, WordStream b,
                                        std::size_t len) {
  a.ensure(len);
  b.ensure(len);
  bool plain = true, exchanged = true;
  for (std::size_t i = 0; i < len && (plain || exchanged); ++i) {
    if (a[i] == b[i])
      exchanged = false;
    else
      plain = false;
  }
  return plain || exchanged;
}

}  // namespace sturm
