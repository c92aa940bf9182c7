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
  \file abstract_xag.hpp
  \brief Abstract XAGs: AND steps over multi-input linear forms

  An abstract XAG consists of AND steps `x_i = L_{S1i} * L_{S2i}` whose
  fan-ins are linear forms over inputs and previous steps, and a linear
  output form.  Its step count equals its AND-gate count, which makes it
  the natural search object for multiplicative complexity.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "index_set.hpp"
#include "truth_table.hpp"
#include "xag.hpp"

namespace mcsyn
{

struct abstract_step
{
  index_set fanin1;
  index_set fanin2;
};

/*! \brief Abstract XAG with steps numbered n+1..n+r. */
class abstract_xag
{
public:
  explicit abstract_xag( uint32_t num_inputs )
      : num_inputs_( num_inputs )
  {
    if ( num_inputs < 1u )
    {
      throw std::invalid_argument( "abstract_xag: at least one input required" );
    }
  }

  uint32_t num_inputs() const { return num_inputs_; }
  uint32_t num_steps() const { return static_cast<uint32_t>( steps_.size() ); }
  std::vector<abstract_step> const& steps() const { return steps_; }
  std::vector<abstract_step>& steps() { return steps_; }

  uint32_t add_step( index_set fanin1, index_set fanin2 )
  {
    auto const index = num_inputs_ + num_steps() + 1u;
    if ( index > 64u )
    {
      throw std::invalid_argument( "abstract_xag: at most 64 nodes supported" );
    }
    for ( auto const* s : { &fanin1, &fanin2 } )
    {
      if ( !s->empty() && s->max_element() >= index )
      {
        throw std::invalid_argument( "abstract_xag: fan-in set members must precede the step" );
      }
    }
    steps_.push_back( { fanin1, fanin2 } );
    return index;
  }

  void set_output( index_set output_set, bool inverted = false )
  {
    if ( !output_set.empty() && output_set.max_element() > num_inputs_ + num_steps() )
    {
      throw std::invalid_argument( "abstract_xag: output set member out of range" );
    }
    output_set_ = output_set;
    output_inverted_ = inverted;
  }

  index_set const& output_set() const { return output_set_; }
  bool output_inverted() const { return output_inverted_; }

  /*! \brief Flattened view of all 2r+1 index sets: S_{1(n+1)}, S_{2(n+1)}, ..., S. */
  index_set const& flat_set( uint32_t l ) const
  {
    if ( l < 1u || l > 2u * num_steps() + 1u )
    {
      throw std::out_of_range( "abstract_xag: flat set index out of range" );
    }
    if ( l == 2u * num_steps() + 1u )
    {
      return output_set_;
    }
    auto const& step = steps_[( l - 1u ) / 2u];
    return ( l & 1u ) ? step.fanin1 : step.fanin2;
  }

  /*! \brief Largest index the l-th flattened set may contain. */
  uint32_t flat_set_range( uint32_t l ) const
  {
    if ( l < 1u || l > 2u * num_steps() + 1u )
    {
      throw std::out_of_range( "abstract_xag: flat set index out of range" );
    }
    if ( l == 2u * num_steps() + 1u )
    {
      return num_inputs_ + num_steps();
    }
    return num_inputs_ + ( l - 1u ) / 2u;
  }

  bool operator==( abstract_xag const& other ) const
  {
    if ( num_inputs_ != other.num_inputs_ || steps_.size() != other.steps_.size() ||
         output_set_ != other.output_set_ || output_inverted_ != other.output_inverted_ )
    {
      return false;
    }
    for ( auto i = 0u; i < steps_.size(); ++i )
    {
      if ( steps_[i].fanin1 != other.steps_[i].fanin1 || steps_[i].fanin2 != other.steps_[i].fanin2 )
      {
        return false;
      }
    }
    return true;
  }

private:
  uint32_t num_inputs_;
  std::vector<abstract_step> steps_;
  index_set output_set_;
  bool output_inverted_ = false;
};

/*! \brief Truth table of the output linear form, inversion applied. */
inline truth_table simulate( abstract_xag const& net )
{
  auto const n = net.num_inputs();
  std::vector<truth_table> values;
  values.reserve( n + net.num_steps() + 1u );
  values.emplace_back( truth_table( n ) ); /* index 0 unused */
  for ( uint32_t i = 1u; i <= n; ++i )
  {
    values.push_back( truth_table::nth_var( i, n ) );
  }
  auto const eval_form = [&]( index_set const& s ) {
    truth_table acc( n );
    for ( auto m : s.members() )
    {
      acc = acc ^ values[m];
    }
    return acc;
  };
  for ( auto const& step : net.steps() )
  {
    values.push_back( eval_form( step.fanin1 ) & eval_form( step.fanin2 ) );
  }
  auto f = eval_form( net.output_set() );
  return net.output_inverted() ? ~f : f;
}

/*! \brief XOR gates of the sharing-free translation: sum of max(0, |S_l| - 1). */
inline uint32_t xor_cost( abstract_xag const& net )
{
  uint32_t cost = 0u;
  for ( uint32_t l = 1u; l <= 2u * net.num_steps() + 1u; ++l )
  {
    auto const size = net.flat_set( l ).size();
    cost += size > 1u ? size - 1u : 0u;
  }
  return cost;
}

/*! \brief Naive translation into an XAG without gate sharing.
 *
 * Every linear form becomes a left-to-right XOR chain over ascending
 * indices.  The AND count is preserved; the result is deterministic.
 * A step whose fan-ins are the same singleton set has no two-input AND
 * realization and is rejected; optimum networks never contain one.
 */
inline xag to_xag( abstract_xag const& net )
{
  auto const n = net.num_inputs();
  xag result( n );
  /* abstract index -> node index in the result */
  std::vector<uint32_t> node_of( n + net.num_steps() + 1u, 0u );
  for ( uint32_t i = 1u; i <= n; ++i )
  {
    node_of[i] = i;
  }
  auto const build_chain = [&]( index_set const& s ) -> uint32_t {
    uint32_t acc = 0u;
    for ( auto m : s.members() )
    {
      auto const node = node_of[m];
      if ( acc == 0u )
      {
        acc = node;
      }
      else
      {
        acc = result.add_xor( std::min( acc, node ), std::max( acc, node ) );
      }
    }
    return acc;
  };
  auto abstract_index = n + 1u;
  for ( auto const& step : net.steps() )
  {
    if ( step.fanin1.empty() || step.fanin2.empty() )
    {
      throw std::invalid_argument( "to_xag: AND step with empty fan-in set" );
    }
    auto const a = build_chain( step.fanin1 );
    auto const b = build_chain( step.fanin2 );
    if ( a == b )
    {
      throw std::invalid_argument( "to_xag: step with equal singleton fan-ins" );
    }
    node_of[abstract_index++] = result.add_and( std::min( a, b ), std::max( a, b ) );
  }
  result.set_output( build_chain( net.output_set() ), net.output_inverted() );
  return result;
}

/*! \brief Merges XOR gates between AND gates into linear forms. */
inline abstract_xag to_abstract( xag const& net )
{
  auto const n = net.num_inputs();
  abstract_xag result( n );
  /* linear form of each node over inputs and AND steps, as abstract indices */
  std::vector<index_set> form( n + net.num_steps() + 1u );
  for ( uint32_t i = 1u; i <= n; ++i )
  {
    form[i] = index_set{ i };
  }
  auto node_index = n + 1u;
  for ( auto const& s : net.steps() )
  {
    if ( s.kind == gate_kind::xor_gate )
    {
      form[node_index] = form[s.fanin1] ^ form[s.fanin2];
    }
    else
    {
      auto const step_index = result.add_step( form[s.fanin1], form[s.fanin2] );
      form[node_index] = index_set{ step_index };
    }
    ++node_index;
  }
  result.set_output( form[net.output()], net.output_inverted() );
  return result;
}

/*! \brief Rewrites steps until no fan-in set contains the other.
 *
 * A step `L_{S1} * L_{S2}` with `S1` a subset of `S2` equals
 * `L_{S1} + (L_{S1} * L_{S2 \ S1})`, so the step is replaced by the
 * product with the difference and the residual linear part is folded
 * into every later set that references the step.  Function and step
 * count are preserved.
 *
 * Degenerate steps with equal fan-ins compute a plain linear form; they
 * are rewritten into the trivial product `L_a * L_a` with `a` the
 * smallest member (or left untouched when both sets are empty), and the
 * folded correction accounts for the remaining members.
 */
inline abstract_xag subset_free_normalize( abstract_xag const& net )
{
  auto result = net;
  auto const n = result.num_inputs();
  auto const fold_into_successors = [&]( uint32_t step_pos, index_set const& correction ) {
    if ( correction.empty() )
    {
      return;
    }
    auto const step_index = n + step_pos + 1u;
    for ( auto j = step_pos + 1u; j < result.num_steps(); ++j )
    {
      for ( auto* s : { &result.steps()[j].fanin1, &result.steps()[j].fanin2 } )
      {
        if ( s->contains( step_index ) )
        {
          *s = *s ^ correction;
        }
      }
    }
    if ( result.output_set().contains( step_index ) )
    {
      result.set_output( result.output_set() ^ correction, result.output_inverted() );
    }
  };
  auto const is_referenced = [&]( uint32_t step_pos ) {
    auto const step_index = n + step_pos + 1u;
    for ( auto j = step_pos + 1u; j < result.num_steps(); ++j )
    {
      if ( result.steps()[j].fanin1.contains( step_index ) || result.steps()[j].fanin2.contains( step_index ) )
      {
        return true;
      }
    }
    return result.output_set().contains( step_index );
  };
  for ( uint32_t pos = 0u; pos < result.num_steps(); ++pos )
  {
    auto& step = result.steps()[pos];
    if ( step.fanin1 == step.fanin2 )
    {
      if ( step.fanin1.empty() || !is_referenced( pos ) )
      {
        continue;
      }
      /* step computes L_{S1}: keep the smallest member as a trivial product */
      auto const a = step.fanin1.min_element();
      auto const correction = step.fanin1 - index_set{ a };
      step.fanin1 = index_set{ a };
      step.fanin2 = index_set{ a };
      fold_into_successors( pos, correction );
      continue;
    }
    if ( step.fanin1.empty() || step.fanin2.empty() )
    {
      /* step computes constant 0: drop references and canonicalize */
      auto const step_index = n + pos + 1u;
      for ( auto j = pos + 1u; j < result.num_steps(); ++j )
      {
        for ( auto* s : { &result.steps()[j].fanin1, &result.steps()[j].fanin2 } )
        {
          s->erase( step_index );
        }
      }
      auto out = result.output_set();
      out.erase( step_index );
      result.set_output( out, result.output_inverted() );
      step.fanin1 = index_set{};
      step.fanin2 = index_set{};
      continue;
    }
    if ( step.fanin2.subset_of( step.fanin1 ) )
    {
      std::swap( step.fanin1, step.fanin2 );
    }
    if ( step.fanin1.subset_of( step.fanin2 ) )
    {
      step.fanin2 = step.fanin2 - step.fanin1;
      fold_into_successors( pos, step.fanin1 );
    }
  }
  return result;
}

/*! \brief True if no step's fan-in set contains the other (degenerate equal fan-ins exempt). */
inline bool is_subset_free( abstract_xag const& net )
{
  for ( auto const& step : net.steps() )
  {
    if ( step.fanin1 == step.fanin2 )
    {
      continue;
    }
    if ( step.fanin1.subset_of( step.fanin2 ) || step.fanin2.subset_of( step.fanin1 ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace mcsyn
