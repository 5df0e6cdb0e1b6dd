#include "morsecob/expression.hpp"

#include <cctype>
#include <vector>

namespace morsecob {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument("at byte " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

namespace {

constexpr int kMaxGenus = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Surface surface() {
    std::vector<SurfaceComponent> comps{term()};
    while (accept('+')) {
      comps.push_back(term());
    }
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return Surface(std::move(comps)).canonical();
  }

 private:
  SurfaceComponent term() {
    auto c = atom();
    while (accept('#')) {
      const auto at = pos_;
      c = connected_sum(c, atom());
      if (c.genus() > kMaxGenus) {
        throw ParseError("genus exceeds " + std::to_string(kMaxGenus), at);
      }
    }
    return c;
  }

  SurfaceComponent atom() {
    skip_ws();
    const auto start = pos_;
    if (pos_ == text_.size()) {
      throw ParseError("expected a surface (S2, T2, RP2, K2, O<g> or N<k>)", start);
    }
    for (const auto& [name, comp] : kAliases) {
      if (text_.substr(pos_, name.size()) == name && !alnum_at(pos_ + name.size())) {
        pos_ += name.size();
        return comp;
      }
    }
    const char head = text_[pos_];
    if (head == 'O' || head == 'N') {
      ++pos_;
      const int genus = integer();
      if (alnum_at(pos_)) {
        throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
      }
      if (head == 'O') {
        return SurfaceComponent::orientable(genus);
      }
      if (genus < 1) {
        throw ParseError("non-orientable genus must be >= 1", start);
      }
      return SurfaceComponent::non_orientable(genus);
    }
    throw ParseError("expected a surface (S2, T2, RP2, K2, O<g> or N<k>)", start);
  }

  int integer() {
    const auto start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxGenus) {
        throw ParseError("genus exceeds " + std::to_string(kMaxGenus), start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected a genus after '" + std::string(1, text_[start - 1]) + "'",
                       start);
    }
    return static_cast<int>(value);
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool alnum_at(std::size_t i) const {
    return i < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i]));
  }

  inline static const std::pair<std::string_view, SurfaceComponent> kAliases[] = {
      {"RP2", SurfaceComponent::non_orientable(1)},
      {"S2", SurfaceComponent::sphere()},
      {"T2", SurfaceComponent::orientable(1)},
      {"K2", SurfaceComponent::non_orientable(2)},
  };

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Surface parse_surface(std::string_view text) { return Parser(text).surface(); }

}  // namespace morsecob
