#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <sturm/error.hpp>
#include <sturm/letters.hpp>
#include <sturm/name.hpp>
#include <sturm/word_stream.hpp>

// Concrete binary morphisms.  The elementary generators are
//
//   phi_a: 0->0, 1->10   phi_b: 0->0, 1->01
//   phi_alpha: 0->01, 1->1   phi_beta: 0->10, 1->1   E: 0->1, 1->0
//
// and a name u_0 u_1 ... u_{n-1} denotes phi_{u_0} o phi_{u_1} o ... o
// phi_{u_{n-1}} (first letter outermost), with ".E" composing E on the
// right.  Images grow exponentially with the name length, so fixed points
// are generated through a resumable block cursor instead of materialized
// images.

namespace sturm {

struct BinaryMorphism {
  std::string image0;
  std::string image1;

  static BinaryMorphism identity() { return {"0", "1"}; }
  static BinaryMorphism exchange() { return {"1", "0"}; }

  static BinaryMorphism generator(char letter) {
    switch (letter) {
      case 'a':
        return {"0", "10"};
      case 'b':
        return {"0", "01"};
      case kAlpha:
        return {"01", "1"};
      case kBeta:
        return {"10", "1"};
      default:
        throw domain_error("generator: not a name letter");
    }
  }

  const std::string& image(char c) const { return c == '0' ? image0 : image1; }

  std::string apply(std::string_view word) const {
    std::string out;
    out.reserve(word.size() * 2);
    for (char c : word) out += image(c);
    return out;
  }

  bool operator==(const BinaryMorphism&) const = default;
};

// (f o g)(x) = f(g(x)).
inline BinaryMorphism compose(const BinaryMorphism& f,
                              const BinaryMorphism& g) {
  return {f.apply(g.image0), f.apply(g.image1)};
}

// Materializes the images; exponential in the name length.
inline BinaryMorphism from_name(const MorphismName& w) {
  BinaryMorphism acc = BinaryMorphism::identity();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    acc = compose(BinaryMorphism::generator(*it), acc);
  if (w.exchange) acc = compose(acc, BinaryMorphism::exchange());
  return acc;
}

// entry(x, l) = number of occurrences of letter l in the image of x, so
// matrix(compose(f, g)) = matrix(g) * matrix(f).
struct IncidenceMatrix {
  std::array<std::array<long long, 2>, 2> m{};

  long long entry(int x, int l) const { return m[x][l]; }
  long long trace() const { return m[0][0] + m[1][1]; }
  long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  friend IncidenceMatrix operator*(const IncidenceMatrix& a,
                                   const IncidenceMatrix& b) {
    IncidenceMatrix out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return out;
  }

  bool strictly_positive() const {
    return m[0][0] > 0 && m[0][1] > 0 && m[1][0] > 0 && m[1][1] > 0;
  }

  bool operator==(const IncidenceMatrix&) const = default;
};

inline IncidenceMatrix matrix_of(const BinaryMorphism& f) {
  IncidenceMatrix out;
  for (int x = 0; x < 2; ++x) {
    const std::string& img = x == 0 ? f.image0 : f.image1;
    for (char c : img) ++out.m[x][c - '0'];
  }
  return out;
}

// Product of generator matrices; avoids materializing images.
inline IncidenceMatrix matrix_of(const MorphismName& w) {
  IncidenceMatrix acc{{{{1, 0}, {0, 1}}}};
  for (char c : w.letters)
    acc = acc * matrix_of(BinaryMorphism::generator(c));
  if (w.exchange)
    acc = matrix_of(BinaryMorphism::exchange()) * acc;
  return acc;
}

// A plain name is primitive iff it uses at least one Latin and one Greek
// letter; an exchange-suffixed name is tested through its square w F(w).
inline bool is_primitive(const MorphismName& w) {
  if (w.letters.empty()) return false;
  if (w.exchange) return true;  // w F(w) always mixes the two classes
  bool latin = false, greek = false;
  for (char c : w.letters) (is_latin(c) ? latin : greek) = true;
  return latin && greek;
}

namespace detail {

// First letter of the image of c, letter by letter through the
// composition chain.
inline char first_letter_of_image(const MorphismName& w, char c) {
  if (w.exchange) c = exchange_binary(c);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (*it) {
      case 'a':
      case kAlpha:
        break;  // firsts preserved
      case 'b':
        c = '0';
        break;
      case kBeta:
        c = '1';
        break;
    }
  }
  return c;
}

inline bool in_letter_set(std::string_view letters, std::string_view set) {
  for (char c : letters)
    if (set.find(c) == std::string_view::npos) return false;
  return true;
}

// Pulls the letters of psi(c) one at a time without materializing the
// image: frame i holds the unread tail of one generator image at depth i.
class ImageCursor {
 public:
  ImageCursor(const MorphismName& name, char c)
      : letters_(name.letters),
        frames_(name.letters.size()),
        base_(name.exchange ? exchange_binary(c) : c) {}

  bool done() const {
    if (!base_used_) return false;
    for (const Frame& f : frames_)
      if (f.pos < f.image.size()) return false;
    return true;
  }

  char next() {
    if (frames_.empty()) {
      base_used_ = true;
      return base_;
    }
    if (frames_[0].pos == frames_[0].image.size()) refill(0);
    return frames_[0].image[frames_[0].pos++];
  }

 private:
  struct Frame {
    std::string_view image;
    std::size_t pos = 0;
  };

  static std::string_view generator_image(char letter, char c) {
    switch (letter) {
      case 'a':
        return c == '0' ? "0" : "10";
      case 'b':
        return c == '0' ? "0" : "01";
      case kAlpha:
        return c == '0' ? "01" : "1";
      default:
        return c == '0' ? "10" : "1";
    }
  }

  void refill(std::size_t i) {
    char y;
    if (i + 1 == frames_.size()) {
      if (base_used_) throw std::logic_error("image cursor exhausted");
      base_used_ = true;
      y = base_;
    } else {
      if (frames_[i + 1].pos == frames_[i + 1].image.size()) refill(i + 1);
      y = frames_[i + 1].image[frames_[i + 1].pos++];
    }
    frames_[i] = Frame{generator_image(letters_[i], y), 0};
  }

  std::string letters_;
  std::vector<Frame> frames_;
  char base_;
  bool base_used_ = false;
};

}  // namespace detail

// Starting letters of fixed points: {0,1} for plain names over {a,alpha},
// empty for exchange-suffixed names over {a,alpha}, one letter otherwise.
inline std::vector<char> fixed_point_starts(const MorphismName& w) {
  if (!is_primitive(w))
    throw domain_error("fixed_point_starts: morphism is not primitive");
  if (w.plain() && detail::in_letter_set(w.letters, {"aA", 2}))
    return {'0', '1'};
  std::vector<char> out;
  if (detail::first_letter_of_image(w, '0') == '0') out.push_back('0');
  if (detail::first_letter_of_image(w, '1') == '1') out.push_back('1');
  return out;
}

// The unique fixed point beginning with `start`, as a lazy stream.  The
// buffer is the concatenation psi(u_0) psi(u_1) ... of images of its own
// letters; a resumable cursor expands one block at a time.
inline WordStream fixed_point(const MorphismName& w, char start) {
  const auto starts = fixed_point_starts(w);
  if (std::find(starts.begin(), starts.end(), start) == starts.end())
    throw domain_error("fixed_point: no fixed point starts with '" +
                       std::string(1, start) + "'");
  struct State {
    MorphismName name;
    detail::ImageCursor cursor;
    std::size_t next_block;
  };
  auto state = std::make_shared<State>(
      State{w, detail::ImageCursor(w, start), 0});
  return WordStream(
      w.render() + ":" + start,
      [state](std::string& buf, std::size_t want) {
        while (buf.size() < want) {
          if (state->cursor.done()) {
            ++state->next_block;
            if (state->next_block >= buf.size())
              throw std::logic_error("fixed point does not grow");
            state->cursor = detail::ImageCursor(state->name,
                                                buf[state->next_block]);
          }
          buf.push_back(state->cursor.next());
        }
      });
}

// Image of a stream under a morphism, as a lazy stream.
inline WordStream image_stream(const BinaryMorphism& f, WordStream source,
                               std::string label = {}) {
  struct State {
    BinaryMorphism f;
    WordStream source;
    std::size_t consumed = 0;
  };
  auto state = std::make_shared<State>(State{f, source});
  if (label.empty()) label = "image(" + source.label() + ")";
  return WordStream(std::move(label),
                    [state](std::string& buf, std::size_t want) {
                      while (buf.size() < want) {
                        const char c = state->source[state->consumed++];
                        buf += state->f.image(c);
                      }
                    });
}

}  // namespace sturm
