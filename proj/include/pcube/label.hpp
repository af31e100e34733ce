#ifndef PCUBE_LABEL_HPP
#define PCUBE_LABEL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace pcube {

/// Largest universe a label can address.
inline constexpr int kMaxDimension = 64;

/// A vertex address in the hypercube Q_m, read as a subset of {0, ..., m-1}.
/// Coordinate i is set iff the vertex lies in the positive halfspace of class i.
class Label {
public:
    constexpr Label() = default;
    constexpr explicit Label(std::uint64_t bits) : bits_(bits) {}

    static constexpr Label unit(int coord) { return Label{std::uint64_t{1} << coord}; }
    static constexpr Label full(int m)
    {
        return Label{m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool has(int coord) const { return (bits_ >> coord) & 1u; }
    constexpr Label flipped(int coord) const { return Label{bits_ ^ (std::uint64_t{1} << coord)}; }
    constexpr Label with(int coord, bool value) const
    {
        return value ? Label{bits_ | (std::uint64_t{1} << coord)}
                     : Label{bits_ & ~(std::uint64_t{1} << coord)};
    }
    constexpr int weight() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(Label other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr Label operator^(Label o) const { return Label{bits_ ^ o.bits_}; }
    constexpr Label operator&(Label o) const { return Label{bits_ & o.bits_}; }
    constexpr Label operator|(Label o) const { return Label{bits_ | o.bits_}; }
    constexpr Label& operator^=(Label o) { bits_ ^= o.bits_; return *this; }
    constexpr Label& operator&=(Label o) { bits_ &= o.bits_; return *this; }
    constexpr Label& operator|=(Label o) { bits_ |= o.bits_; return *this; }
    /// Complement inside a universe of size m.
    constexpr Label complement(int m) const { return Label{~bits_ & full(m).bits_}; }

    constexpr auto operator<=>(const Label&) const = default;

    /// Fixed-width bitstring; character k is coordinate k (leftmost is coordinate 0).
    std::string to_bitstring(int m) const;
    static Label from_bitstring(std::string_view text);

private:
    std::uint64_t bits_ = 0;
};

/// Hamming distance.
constexpr int hamming(Label a, Label b) { return (a ^ b).weight(); }

/// Removes coordinate `coord` and shifts higher coordinates down by one.
constexpr Label delete_coordinate(Label l, int coord)
{
    const std::uint64_t low = l.bits() & ((std::uint64_t{1} << coord) - 1);
    const std::uint64_t high = coord >= 63 ? 0 : (l.bits() >> (coord + 1)) << coord;
    return Label{low | high};
}

/// Inserts a coordinate at position `coord` with the given value.
constexpr Label insert_coordinate(Label l, int coord, bool value)
{
    const std::uint64_t low = l.bits() & ((std::uint64_t{1} << coord) - 1);
    const std::uint64_t high = (l.bits() >> coord) << (coord + 1);
    return Label{low | high | (value ? std::uint64_t{1} << coord : 0)};
}

/// Ascending coordinate indices of a set.
template <class F>
constexpr void for_each_coordinate(Label set, F&& f)
{
    std::uint64_t b = set.bits();
    while (b != 0) {
        f(std::countr_zero(b));
        b &= b - 1;
    }
}

} // namespace pcube

template <>
struct std::hash<pcube::Label> {
    std::size_t operator()(pcube::Label l) const noexcept
    {
        return std::hash<std::uint64_t>{}(l.bits());
    }
};

#endif
