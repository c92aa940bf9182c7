/* mcsyn: SAT-based multiplicative complexity synthesis
 * Copyright (C) 2025-2026  the mcsyn authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file truth_table.hpp
  \brief Bit-vector truth tables for Boolean functions of up to 8 variables
*/

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcsyn
{

/*! \brief Truth table of an n-variable Boolean function, 1 <= n <= 8.
 *
 * Bit `x` of the table is the function value under the input assignment
 * `x = (b_n ... b_1)_2`, i.e., input `x_1` is the least significant index
 * bit.  Hexadecimal strings are written most-significant digit first, so
 * the first digit covers the highest assignments.
 */
class truth_table
{
public:
  static constexpr uint32_t max_num_vars = 8u;

  explicit truth_table( uint32_t num_vars )
      : num_vars_( num_vars )
  {
    if ( num_vars < 1u || num_vars > max_num_vars )
    {
      throw std::invalid_argument( "truth_table: number of variables must be between 1 and 8" );
    }
  }

  uint32_t num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return uint64_t( 1 ) << num_vars_; }

  bool bit( uint64_t pos ) const
  {
    return ( words_[pos >> 6u] >> ( pos & 63u ) ) & 1u;
  }

  void set_bit( uint64_t pos, bool value )
  {
    if ( value )
    {
      words_[pos >> 6u] |= uint64_t( 1 ) << ( pos & 63u );
    }
    else
    {
      words_[pos >> 6u] &= ~( uint64_t( 1 ) << ( pos & 63u ) );
    }
  }

  /*! \brief Parses a hex string with exactly `2^n / 4` digits (one digit for n = 1). */
  static truth_table from_hex( std::string const& hex, uint32_t num_vars )
  {
    truth_table tt( num_vars );
    auto const digits = num_vars >= 2u ? ( tt.num_bits() >> 2u ) : 1u;
    if ( hex.size() != digits )
    {
      throw std::invalid_argument( "from_hex: expected " + std::to_string( digits ) + " hex digits, got " + std::to_string( hex.size() ) );
    }
    for ( uint64_t d = 0u; d < digits; ++d )
    {
      auto const c = hex[digits - 1u - d]; /* last digit covers lowest assignments */
      uint64_t v;
      if ( c >= '0' && c <= '9' )
      {
        v = c - '0';
      }
      else if ( c >= 'a' && c <= 'f' )
      {
        v = 10u + ( c - 'a' );
      }
      else if ( c >= 'A' && c <= 'F' )
      {
        v = 10u + ( c - 'A' );
      }
      else
      {
        throw std::invalid_argument( "from_hex: invalid hex character" );
      }
      if ( num_vars == 1u && ( v >> 2u ) != 0u )
      {
        throw std::invalid_argument( "from_hex: unused high bits must be zero for n = 1" );
      }
      tt.words_[d >> 4u] |= v << ( 4u * ( d & 15u ) );
    }
    return tt;
  }

  /*! \brief Canonical lowercase hex representation. */
  std::string to_hex() const
  {
    auto const digits = num_vars_ >= 2u ? ( num_bits() >> 2u ) : 1u;
    std::string s( digits, '0' );
    for ( uint64_t d = 0u; d < digits; ++d )
    {
      auto const v = ( words_[d >> 4u] >> ( 4u * ( d & 15u ) ) ) & 0xfu;
      s[digits - 1u - d] = "0123456789abcdef"[v];
    }
    return s;
  }

  /*! \brief Table of the projection function `x_var` (1-based). */
  static truth_table nth_var( uint32_t var, uint32_t num_vars )
  {
    truth_table tt( num_vars );
    if ( var < 1u || var > num_vars )
    {
      throw std::invalid_argument( "nth_var: variable index out of range" );
    }
    for ( uint64_t x = 0u; x < tt.num_bits(); ++x )
    {
      tt.set_bit( x, ( x >> ( var - 1u ) ) & 1u );
    }
    return tt;
  }

  bool is_constant_zero() const
  {
    return words_[0] == 0u && words_[1] == 0u && words_[2] == 0u && words_[3] == 0u;
  }

  uint64_t count_ones() const
  {
    uint64_t cnt = 0u;
    for ( auto w : words_ )
    {
      cnt += __builtin_popcountll( w );
    }
    return cnt;
  }

  truth_table operator^( truth_table const& other ) const
  {
    auto r = check_compatible( other );
    for ( auto i = 0u; i < 4u; ++i )
    {
      r.words_[i] = words_[i] ^ other.words_[i];
    }
    return r;
  }

  truth_table operator&( truth_table const& other ) const
  {
    auto r = check_compatible( other );
    for ( auto i = 0u; i < 4u; ++i )
    {
      r.words_[i] = words_[i] & other.words_[i];
    }
    return r;
  }

  truth_table operator|( truth_table const& other ) const
  {
    auto r = check_compatible( other );
    for ( auto i = 0u; i < 4u; ++i )
    {
      r.words_[i] = words_[i] | other.words_[i];
    }
    return r;
  }

  truth_table operator~() const
  {
    truth_table r( num_vars_ );
    for ( auto i = 0u; i < 4u; ++i )
    {
      r.words_[i] = ~words_[i];
    }
    r.mask_unused();
    return r;
  }

  bool operator==( truth_table const& other ) const
  {
    return num_vars_ == other.num_vars_ && words_ == other.words_;
  }

  bool operator!=( truth_table const& other ) const { return !( *this == other ); }

  bool operator<( truth_table const& other ) const
  {
    if ( num_vars_ != other.num_vars_ )
    {
      return num_vars_ < other.num_vars_;
    }
    return words_ < other.words_;
  }

private:
  truth_table check_compatible( truth_table const& other ) const
  {
    if ( num_vars_ != other.num_vars_ )
    {
      throw std::invalid_argument( "truth_table: operand variable counts differ" );
    }
    return truth_table( num_vars_ );
  }

  void mask_unused()
  {
    if ( num_vars_ < 6u )
    {
      words_[0] &= ( uint64_t( 1 ) << num_bits() ) - 1u;
      words_[1] = words_[2] = words_[3] = 0u;
    }
    else if ( num_vars_ == 6u )
    {
      words_[1] = words_[2] = words_[3] = 0u;
    }
    else if ( num_vars_ == 7u )
    {
      words_[2] = words_[3] = 0u;
    }
  }

  uint32_t num_vars_;
  std::array<uint64_t, 4> words_{};
};

/*! \brief A function is normal (0-preserving) if it maps the all-zero assignment to 0. */
inline bool is_normal( truth_table const& f )
{
  return !f.bit( 0u );
}

/*! \brief Returns the function itself or its complement, whichever is normal.
 *
 * The second component is true iff the function was complemented.
 */
inline std::pair<truth_table, bool> normalize( truth_table const& f )
{
  if ( is_normal( f ) )
  {
    return { f, false };
  }
  return { ~f, true };
}

/*! \brief Algebraic normal form as a coefficient table (Moebius transform).
 *
 * Bit `m` of the result is the coefficient of the monomial whose variables
 * are the index bits set in `m`.  The transform is an involution.
 */
inline truth_table algebraic_normal_form( truth_table const& f )
{
  auto anf = f;
  for ( uint64_t step = 1u; step < f.num_bits(); step <<= 1u )
  {
    for ( uint64_t x = 0u; x < f.num_bits(); ++x )
    {
      if ( x & step )
      {
        anf.set_bit( x, anf.bit( x ) ^ anf.bit( x ^ step ) );
      }
    }
  }
  return anf;
}

/*! \brief Algebraic degree, i.e., the size of the largest ANF monomial (0 for constant 0). */
inline uint32_t anf_degree( truth_table const& f )
{
  auto const anf = algebraic_normal_form( f );
  uint32_t degree = 0u;
  for ( uint64_t m = 0u; m < f.num_bits(); ++m )
  {
    if ( anf.bit( m ) )
    {
      degree = std::max<uint32_t>( degree, __builtin_popcountll( m ) );
    }
  }
  return degree;
}

/*! \brief Cofactor with variable `var` (1-based) fixed to `value`. */
inline truth_table cofactor( truth_table const& f, uint32_t var, bool value )
{
  if ( var < 1u || var > f.num_vars() )
  {
    throw std::invalid_argument( "cofactor: variable index out of range" );
  }
  auto r = f;
  auto const stride = uint64_t( 1 ) << ( var - 1u );
  for ( uint64_t x = 0u; x < f.num_bits(); ++x )
  {
    r.set_bit( x, f.bit( value ? ( x | stride ) : ( x & ~stride ) ) );
  }
  return r;
}

/*! \brief Indices of variables whose positive and negative cofactors differ. */
inline std::vector<uint32_t> essential_variables( truth_table const& f )
{
  std::vector<uint32_t> vars;
  for ( uint32_t i = 1u; i <= f.num_vars(); ++i )
  {
    if ( cofactor( f, i, false ) != cofactor( f, i, true ) )
    {
      vars.push_back( i );
    }
  }
  return vars;
}

/*! \brief Table with variables `j` and `k` (1-based) exchanged. */
inline truth_table swap_variables( truth_table const& f, uint32_t j, uint32_t k )
{
  if ( j < 1u || j > f.num_vars() || k < 1u || k > f.num_vars() )
  {
    throw std::invalid_argument( "swap_variables: index out of range" );
  }
  auto r = f;
  for ( uint64_t x = 0u; x < f.num_bits(); ++x )
  {
    auto const bj = ( x >> ( j - 1u ) ) & 1u;
    auto const bk = ( x >> ( k - 1u ) ) & 1u;
    auto y = x & ~( uint64_t( 1 ) << ( j - 1u ) ) & ~( uint64_t( 1 ) << ( k - 1u ) );
    y |= bk << ( j - 1u );
    y |= bj << ( k - 1u );
    r.set_bit( x, f.bit( y ) );
  }
  return r;
}

/*! \brief All pairs `(j, k)` with `j < k` in which the function is symmetric. */
inline std::vector<std::pair<uint32_t, uint32_t>> symmetric_pairs( truth_table const& f )
{
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for ( uint32_t j = 1u; j <= f.num_vars(); ++j )
  {
    for ( uint32_t k = j + 1u; k <= f.num_vars(); ++k )
    {
      if ( swap_variables( f, j, k ) == f )
      {
        pairs.emplace_back( j, k );
      }
    }
  }
  return pairs;
}

} // namespace mcsyn
