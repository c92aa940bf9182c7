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
  \file index_set.hpp
  \brief Small sets of positive indices and the linear/quadratic forms they induce
*/

#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "truth_table.hpp"

namespace mcsyn
{

/*! \brief A set of positive integers in [1, 64], stored as a bit mask.
 *
 * Used for variable and step indices: the empty set denotes the linear
 * form that is constant 0.
 */
class index_set
{
public:
  index_set() = default;

  index_set( std::initializer_list<uint32_t> members )
  {
    for ( auto m : members )
    {
      insert( m );
    }
  }

  static index_set from_mask( uint64_t mask )
  {
    index_set s;
    s.mask_ = mask;
    return s;
  }

  uint64_t mask() const { return mask_; }

  void insert( uint32_t member )
  {
    check_member( member );
    mask_ |= uint64_t( 1 ) << ( member - 1u );
  }

  void erase( uint32_t member )
  {
    check_member( member );
    mask_ &= ~( uint64_t( 1 ) << ( member - 1u ) );
  }

  bool contains( uint32_t member ) const
  {
    return member >= 1u && member <= 64u && ( ( mask_ >> ( member - 1u ) ) & 1u );
  }

  bool empty() const { return mask_ == 0u; }
  uint32_t size() const { return __builtin_popcountll( mask_ ); }

  uint32_t min_element() const
  {
    if ( empty() )
    {
      throw std::logic_error( "index_set: min_element of empty set" );
    }
    return __builtin_ctzll( mask_ ) + 1u;
  }

  uint32_t max_element() const
  {
    if ( empty() )
    {
      throw std::logic_error( "index_set: max_element of empty set" );
    }
    return 64u - __builtin_clzll( mask_ );
  }

  std::vector<uint32_t> members() const
  {
    std::vector<uint32_t> ms;
    for ( auto m = mask_; m != 0u; m &= m - 1u )
    {
      ms.push_back( __builtin_ctzll( m ) + 1u );
    }
    return ms;
  }

  index_set operator^( index_set const& other ) const { return from_mask( mask_ ^ other.mask_ ); }
  index_set operator|( index_set const& other ) const { return from_mask( mask_ | other.mask_ ); }
  index_set operator&( index_set const& other ) const { return from_mask( mask_ & other.mask_ ); }
  index_set operator-( index_set const& other ) const { return from_mask( mask_ & ~other.mask_ ); }

  bool subset_of( index_set const& other ) const { return ( mask_ & ~other.mask_ ) == 0u; }
  bool disjoint_with( index_set const& other ) const { return ( mask_ & other.mask_ ) == 0u; }

  bool operator==( index_set const& other ) const { return mask_ == other.mask_; }
  bool operator!=( index_set const& other ) const { return mask_ != other.mask_; }

  std::string to_string() const
  {
    std::string s = "{";
    auto first = true;
    for ( auto m : members() )
    {
      if ( !first )
      {
        s += ",";
      }
      s += std::to_string( m );
      first = false;
    }
    return s + "}";
  }

private:
  static void check_member( uint32_t member )
  {
    if ( member < 1u || member > 64u )
    {
      throw std::invalid_argument( "index_set: members must be in [1, 64]" );
    }
  }

  uint64_t mask_ = 0u;
};

/*! \brief Value of the linear form `L_S` under an assignment.
 *
 * Bit `i - 1` of `assignment` is the value of `x_i`; `L_{} = 0`.
 */
inline bool eval_linear( index_set const& s, uint64_t assignment, uint32_t num_bits )
{
  if ( !s.empty() && s.max_element() > num_bits )
  {
    throw std::out_of_range( "eval_linear: set member exceeds assignment width" );
  }
  auto const masked = s.mask() & assignment;
  return __builtin_popcountll( masked ) & 1u;
}

/*! \brief Value of the quadratic form `Q_{ST} = L_S * L_T` for disjoint `S`, `T`. */
inline bool eval_quadratic( index_set const& s, index_set const& t, uint64_t assignment, uint32_t num_bits )
{
  if ( !s.disjoint_with( t ) )
  {
    throw std::invalid_argument( "eval_quadratic: sets must be disjoint" );
  }
  return eval_linear( s, assignment, num_bits ) && eval_linear( t, assignment, num_bits );
}

/*! \brief Truth table of the linear form `L_S` over `num_vars` input variables. */
inline truth_table linear_table( index_set const& s, uint32_t num_vars )
{
  truth_table tt( num_vars );
  if ( !s.empty() && s.max_element() > num_vars )
  {
    throw std::out_of_range( "linear_table: set member exceeds variable count" );
  }
  for ( auto m : s.members() )
  {
    tt = tt ^ truth_table::nth_var( m, num_vars );
  }
  return tt;
}

/*! \brief Truth table of `Q_{ST}` over `num_vars` input variables. */
inline truth_table quadratic_table( index_set const& s, index_set const& t, uint32_t num_vars )
{
  if ( !s.disjoint_with( t ) )
  {
    throw std::invalid_argument( "quadratic_table: sets must be disjoint" );
  }
  return linear_table( s, num_vars ) & linear_table( t, num_vars );
}

} // namespace mcsyn
