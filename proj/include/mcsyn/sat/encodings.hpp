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
  \file encodings.hpp
  \brief Reusable CNF gadgets: Tseytin chains, lexicographic ordering, sorter networks
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "session.hpp"

namespace mcsyn::sat
{

/*! \brief Returns a literal equivalent to the XOR of the inputs.
 *
 * A left fold over the input order; uses one auxiliary variable per
 * input beyond the first.  A single input is returned unchanged.
 */
inline literal encode_xor_chain( solver_session& s, std::vector<literal> const& lits )
{
  if ( lits.empty() )
  {
    throw std::invalid_argument( "encode_xor_chain: empty input list" );
  }
  auto acc = lits[0];
  for ( size_t i = 1u; i < lits.size(); ++i )
  {
    auto const b = lits[i];
    auto const z = s.new_variable();
    s.add_clause( { ~acc, ~b, ~z } );
    s.add_clause( { acc, b, ~z } );
    s.add_clause( { acc, ~b, z } );
    s.add_clause( { ~acc, b, z } );
    acc = z;
  }
  return acc;
}

/*! \brief Returns a fresh literal equivalent to `a AND b` (three clauses). */
inline literal encode_and( solver_session& s, literal a, literal b )
{
  auto const t = s.new_variable();
  s.add_clause( { ~t, a } );
  s.add_clause( { ~t, b } );
  s.add_clause( { t, ~a, ~b } );
  return t;
}

/*! \brief Returns a fresh literal equivalent to the OR of the inputs. */
inline literal encode_or( solver_session& s, std::vector<literal> const& lits )
{
  if ( lits.empty() )
  {
    throw std::invalid_argument( "encode_or: empty input list" );
  }
  auto const t = s.new_variable();
  std::vector<literal> big{ ~t };
  for ( auto const& l : lits )
  {
    s.add_clause( { t, ~l } );
    big.push_back( l );
  }
  s.add_clause( big );
  return t;
}

/*! \brief Constrains `a` and `b` to be equal (two clauses). */
inline void encode_equal( solver_session& s, literal a, literal b )
{
  s.add_clause( { ~a, b } );
  s.add_clause( { a, ~b } );
}

/*! \brief Constrains the indicator vector `a` to be no larger than `b`.
 *
 * Both vectors describe index sets, position k standing for index k+1.
 * Comparison starts at the highest index: at the largest position where
 * the vectors differ, `b` must hold the one.  Equal vectors satisfy the
 * constraint.  A chain of auxiliary variables tracks positions at which
 * the comparison is still undecided, three clauses per inner position.
 */
inline void encode_lex_smaller( solver_session& s, std::vector<literal> const& a, std::vector<literal> const& b )
{
  if ( a.size() != b.size() || a.empty() )
  {
    throw std::invalid_argument( "encode_lex_smaller: vectors must be nonempty and of equal length" );
  }
  auto const w = a.size();
  literal active{ 0u, false };
  auto have_active = false; /* leading position has no chain literal */
  for ( size_t k = 0u; k < w; ++k )
  {
    auto const pos = w - 1u - k; /* scan from the most significant index down */
    auto const x = a[pos];
    auto const y = b[pos];
    if ( k + 1u == w )
    {
      /* final position: non-strict */
      if ( have_active )
      {
        s.add_clause( { ~active, ~x, y } );
      }
      else
      {
        s.add_clause( { ~x, y } );
      }
      break;
    }
    auto const next = s.new_variable();
    if ( have_active )
    {
      s.add_clause( { ~active, ~x, y } );
      s.add_clause( { ~active, ~x, next } );
      s.add_clause( { ~active, y, next } );
    }
    else
    {
      s.add_clause( { ~x, y } );
      s.add_clause( { ~x, next } );
      s.add_clause( { y, next } );
    }
    active = next;
    have_active = true;
  }
}

namespace detail
{

/*! \brief Compare-exchange: out.first is the OR (larger), out.second the AND (smaller). */
inline std::pair<literal, literal> comparator( solver_session& s, literal a, literal b )
{
  auto const hi = s.new_variable();
  auto const lo = s.new_variable();
  s.add_clause( { ~a, hi } );
  s.add_clause( { ~b, hi } );
  s.add_clause( { ~hi, a, b } );
  s.add_clause( { ~lo, a } );
  s.add_clause( { ~lo, b } );
  s.add_clause( { lo, ~a, ~b } );
  return { hi, lo };
}

inline std::vector<literal> oddeven_merge( solver_session& s, std::vector<literal> const& a, std::vector<literal> const& b )
{
  if ( a.size() == 1u )
  {
    auto const [hi, lo] = comparator( s, a[0], b[0] );
    return { hi, lo };
  }
  std::vector<literal> a_even, a_odd, b_even, b_odd;
  for ( size_t i = 0u; i < a.size(); ++i )
  {
    ( i % 2u == 0u ? a_even : a_odd ).push_back( a[i] );
    ( i % 2u == 0u ? b_even : b_odd ).push_back( b[i] );
  }
  auto const even = oddeven_merge( s, a_even, b_even );
  auto const odd = oddeven_merge( s, a_odd, b_odd );
  std::vector<literal> out;
  out.push_back( even[0] );
  for ( size_t i = 0u; i + 1u < even.size(); ++i )
  {
    auto const [hi, lo] = comparator( s, odd[i], even[i + 1u] );
    out.push_back( hi );
    out.push_back( lo );
  }
  out.push_back( odd.back() );
  return out;
}

inline std::vector<literal> oddeven_sort( solver_session& s, std::vector<literal> const& in )
{
  if ( in.size() == 1u )
  {
    return in;
  }
  auto const half = in.size() / 2u;
  auto const lo = oddeven_sort( s, { in.begin(), in.begin() + half } );
  auto const hi = oddeven_sort( s, { in.begin() + half, in.end() } );
  return oddeven_merge( s, lo, hi );
}

} // namespace detail

/*! \brief Batcher odd-even merge sorter over the input literals.
 *
 * Output k is true iff at least k+1 inputs are true; outputs are thus
 * sorted in descending order.  Inputs are padded to a power of two with
 * a constant-false literal, and the padded outputs are dropped.
 */
inline std::vector<literal> encode_sorter( solver_session& s, std::vector<literal> const& inputs )
{
  if ( inputs.empty() )
  {
    return {};
  }
  auto padded = inputs;
  while ( ( padded.size() & ( padded.size() - 1u ) ) != 0u )
  {
    padded.push_back( s.false_literal() );
  }
  auto out = detail::oddeven_sort( s, padded );
  out.resize( inputs.size() );
  return out;
}

/*! \brief Asserts that fewer than `p` of the sorter's inputs are true.
 *
 * Forces the p-th most significant sorter output to false; `p = 0`
 * forces all inputs false.
 */
inline void constrain_at_most( solver_session& s, std::vector<literal> const& sorted_outputs, uint32_t p )
{
  if ( p > sorted_outputs.size() )
  {
    throw std::invalid_argument( "constrain_at_most: bound exceeds sorter width" );
  }
  if ( sorted_outputs.empty() )
  {
    return;
  }
  auto const index = p == 0u ? 0u : p - 1u;
  s.add_clause( { ~sorted_outputs[index] } );
}

} // namespace mcsyn::sat
