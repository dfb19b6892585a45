#ifndef MATCHFREE_EXTENDED_INT_HPP
#define MATCHFREE_EXTENDED_INT_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace matchfree {

/// Integer with +infinity / -infinity sentinels.  Girth of an acyclic graph
/// is +inf, dimension of the void complex is -inf.  Arithmetic on a sentinel
/// throws instead of silently overflowing.
class ExtendedInt {
  public:
    constexpr ExtendedInt() : kind_(Kind::Finite), value_(0) {}
    constexpr ExtendedInt(int v) : kind_(Kind::Finite), value_(v) {}

    static constexpr ExtendedInt infinity() { return ExtendedInt(Kind::PosInf); }
    static constexpr ExtendedInt neg_infinity() { return ExtendedInt(Kind::NegInf); }

    constexpr bool finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_infinite() const { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_infinite() const { return kind_ == Kind::NegInf; }

    constexpr int value() const {
        if (!finite()) throw std::logic_error("ExtendedInt: value() on a sentinel");
        return value_;
    }

    friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
        auto level = [](const ExtendedInt& x) { return x.kind_ == Kind::NegInf ? -1 : x.kind_ == Kind::PosInf ? 1 : 0; };
        if (level(a) != level(b)) return level(a) <=> level(b);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    constexpr ExtendedInt operator+(int d) const {
        if (!finite()) throw std::logic_error("ExtendedInt: arithmetic on a sentinel");
        return ExtendedInt(value_ + d);
    }

    std::string to_string() const {
        if (kind_ == Kind::PosInf) return "inf";
        if (kind_ == Kind::NegInf) return "-inf";
        return std::to_string(value_);
    }

  private:
    enum class Kind { Finite, PosInf, NegInf };
    constexpr explicit ExtendedInt(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    int value_;
};

}  // namespace matchfree

#endif
