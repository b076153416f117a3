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

#include "gammasg/subset-mask.hpp"

#include <sstream>  // for ostringstream

#include "gammasg/errors.hpp"

namespace gammasg {

  SubsetMask::SubsetMask(std::size_t n) : _n(n) {
    if (n > kMaxElements) {
      throw StructureError("subset mask: carrier size " + std::to_string(n)
                           + " exceeds " + std::to_string(kMaxElements));
    }
  }

  SubsetMask SubsetMask::full(std::size_t n) {
    SubsetMask m(n);
    for (std::size_t w = 0; w < m.word_count(); ++w) {
      m._words[w] = ~std::uint64_t(0);
    }
    if (n % kWordBits != 0) {
      m._words[n / kWordBits] = (std::uint64_t(1) << (n % kWordBits)) - 1;
    }
    return m;
  }

  SubsetMask SubsetMask::singleton(std::size_t n, element_index a) {
    SubsetMask m(n);
    if (a >= n) {
      throw UsageError("subset mask: element " + std::to_string(a)
                       + " out of range");
    }
    m.insert(a);
    return m;
  }

  SubsetMask SubsetMask::of(std::size_t                       n,
                            std::vector<element_index> const& elts) {
    SubsetMask m(n);
    for (auto a : elts) {
      if (a >= n) {
        throw UsageError("subset mask: element " + std::to_string(a)
                         + " out of range");
      }
      m.insert(a);
    }
    return m;
  }

  SubsetMask SubsetMask::from_bits(std::size_t n, std::uint64_t bits) {
    if (n > kWordBits) {
      throw UsageError("subset mask: from_bits requires n <= 64");
    }
    SubsetMask m(n);
    m._words[0] = bits & full(n)._words[0];
    return m;
  }

  bool SubsetMask::empty() const noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) {
      if (_words[w] != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t SubsetMask::count() const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < word_count(); ++w) {
      c += std::popcount(_words[w]);
    }
    return c;
  }

  bool SubsetMask::is_subset_of(SubsetMask const& that) const noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) {
      if ((_words[w] & ~that._words[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<element_index> SubsetMask::elements() const {
    return {begin(), end()};
  }

  SubsetMask& SubsetMask::operator|=(SubsetMask const& that) noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) {
      _words[w] |= that._words[w];
    }
    return *this;
  }

  SubsetMask& SubsetMask::operator&=(SubsetMask const& that) noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) {
      _words[w] &= that._words[w];
    }
    return *this;
  }

  SubsetMask SubsetMask::complement() const noexcept {
    SubsetMask result = full(_n);
    for (std::size_t w = 0; w < word_count(); ++w) {
      result._words[w] &= ~_words[w];
    }
    return result;
  }

  bool operator<(SubsetMask const& lhs, SubsetMask const& rhs) noexcept {
    if (lhs._n != rhs._n) {
      return lhs._n < rhs._n;
    }
    for (std::size_t w = SubsetMask::kWords; w-- > 0;) {
      if (lhs._words[w] != rhs._words[w]) {
        return lhs._words[w] < rhs._words[w];
      }
    }
    return false;
  }

  element_index SubsetMask::next_from(std::size_t pos) const noexcept {
    while (pos < _n) {
      std::size_t   w    = pos / kWordBits;
      std::uint64_t bits = _words[w] >> (pos % kWordBits);
      if (bits != 0) {
        std::size_t found = pos + std::countr_zero(bits);
        return found < _n ? found : _n;
      }
      pos = (w + 1) * kWordBits;
    }
    return _n;
  }

  std::string to_string(SubsetMask const& mask) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto a : mask) {
      out << (first ? "" : ", ") << a;
      first = false;
    }
    out << '}';
    return out.str();
  }

}  // namespace gammasg
