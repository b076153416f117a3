//
// gammasg - verification toolkit for finite ordered Gamma-semigroups
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// SubsetMask is a fixed-capacity bit set over the carrier {0, ..., n - 1} of
// a finite structure. It is the carrier for every subset that appears in the
// subset algebra: A, B, (H], AΓB, ideals, filters, N(a), 𝒩-classes, ...
//
// Capacity is kMaxElements; only the first ceil(n / 64) words are ever
// touched, so the common n <= 64 case costs one word per operation.

#ifndef GAMMASG_SUBSET_MASK_HPP_
#define GAMMASG_SUBSET_MASK_HPP_

#include <array>     // for array
#include <bit>       // for countr_zero, popcount
#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <iterator>  // for forward_iterator_tag
#include <string>    // for string
#include <vector>    // for vector

namespace gammasg {

  using element_index = std::size_t;
  using op_index      = std::size_t;

  inline constexpr std::size_t kMaxElements = 256;

  class SubsetMask {
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t kWords    = kMaxElements / kWordBits;

   public:
    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = element_index;
      using difference_type   = std::ptrdiff_t;
      using pointer           = element_index const*;
      using reference         = element_index;

      const_iterator() = default;
      const_iterator(SubsetMask const* mask, std::size_t pos)
          : _mask(mask), _pos(mask->next_from(pos)) {}

      element_index operator*() const noexcept {
        return _pos;
      }

      const_iterator& operator++() noexcept {
        _pos = _mask->next_from(_pos + 1);
        return *this;
      }

      const_iterator operator++(int) noexcept {
        auto tmp = *this;
        ++*this;
        return tmp;
      }

      bool operator==(const_iterator const& that) const noexcept {
        return _pos == that._pos;
      }

     private:
      SubsetMask const* _mask = nullptr;
      std::size_t       _pos  = 0;
    };

    SubsetMask() = default;

    // The empty subset of an n-element carrier.
    explicit SubsetMask(std::size_t n);

    static SubsetMask full(std::size_t n);
    static SubsetMask singleton(std::size_t n, element_index a);
    static SubsetMask of(std::size_t n, std::vector<element_index> const& elts);
    // Bit i of `bits` is element i; requires n <= 64.
    static SubsetMask from_bits(std::size_t n, std::uint64_t bits);

    std::size_t universe_size() const noexcept {
      return _n;
    }

    bool contains(element_index a) const noexcept {
      return (_words[a / kWordBits] >> (a % kWordBits)) & 1U;
    }

    void insert(element_index a) noexcept {
      _words[a / kWordBits] |= std::uint64_t(1) << (a % kWordBits);
    }

    void erase(element_index a) noexcept {
      _words[a / kWordBits] &= ~(std::uint64_t(1) << (a % kWordBits));
    }

    bool        empty() const noexcept;
    std::size_t count() const noexcept;
    bool        is_subset_of(SubsetMask const& that) const noexcept;

    // Lowest set bit, or universe_size() if empty.
    element_index first() const noexcept {
      return next_from(0);
    }

    // Bits 0..63 packed into an integer, for n <= 64.
    std::uint64_t to_bits() const noexcept {
      return _words[0];
    }

    std::vector<element_index> elements() const;

    const_iterator begin() const {
      return const_iterator(this, 0);
    }

    const_iterator end() const {
      return const_iterator(this, _n);
    }

    SubsetMask& operator|=(SubsetMask const& that) noexcept;
    SubsetMask& operator&=(SubsetMask const& that) noexcept;

    friend SubsetMask operator|(SubsetMask        lhs,
                                SubsetMask const& rhs) noexcept {
      return lhs |= rhs;
    }

    friend SubsetMask operator&(SubsetMask        lhs,
                                SubsetMask const& rhs) noexcept {
      return lhs &= rhs;
    }

    // Set complement relative to the carrier.
    SubsetMask complement() const noexcept;

    friend bool operator==(SubsetMask const&, SubsetMask const&) = default;

    // Orders by universe size, then by the binary number the mask spells
    // (element n - 1 most significant).
    friend bool operator<(SubsetMask const& lhs,
                          SubsetMask const& rhs) noexcept;

   private:
    std::size_t word_count() const noexcept {
      return (_n + kWordBits - 1) / kWordBits;
    }

    element_index next_from(std::size_t pos) const noexcept;

    std::size_t                       _n = 0;
    std::array<std::uint64_t, kWords> _words{};
  };

  // "{0, 2}" with element indices; use the I/O layer for names.
  std::string to_string(SubsetMask const& mask);

}  // namespace gammasg

#endif  // GAMMASG_SUBSET_MASK_HPP_
