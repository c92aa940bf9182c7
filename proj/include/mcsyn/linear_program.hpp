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
  \file linear_program.hpp
  \brief XOR minimization: support-minimal abstract XAGs and shortest linear networks

  Two stages reduce the XOR count once the AND count is settled.  A
  sorter-network cardinality constraint shrinks the total fan-in support
  of the abstract XAG, and an exact SAT search then finds the shortest
  straight-line XOR program computing all of its linear forms, from
  which the final network is rebuilt.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "abstract_xag.hpp"
#include "mc_encoding.hpp"
#include "sat/encodings.hpp"
#include "sat/session.hpp"
#include "xag.hpp"

namespace mcsyn
{

/*! \brief Boolean matrix whose rows are linear forms over the columns. */
struct linear_matrix
{
  uint32_t cols = 0u;
  std::vector<uint64_t> rows; /* bit j-1 set iff column j is in the row's form */

  uint32_t num_rows() const { return static_cast<uint32_t>( rows.size() ); }

  static uint32_t popcount( uint64_t row ) { return __builtin_popcountll( row ); }
};

/*! \brief Straight-line XOR program over `num_inputs` variables.
 *
 * Steps are numbered from `num_inputs + 1`; each output maps to an
 * input, a step, or 0 for the constant-0 form.
 */
struct linear_network
{
  uint32_t num_inputs = 0u;
  std::vector<std::pair<uint32_t, uint32_t>> steps;
  std::vector<uint32_t> outputs;

  uint32_t num_steps() const { return static_cast<uint32_t>( steps.size() ); }
};

/*! \brief Linear form computed by every node of the program, as column masks. */
inline std::vector<uint64_t> linear_network_forms( linear_network const& net )
{
  std::vector<uint64_t> forms( net.num_inputs + net.steps.size() + 1u, 0u );
  for ( uint32_t j = 1u; j <= net.num_inputs; ++j )
  {
    forms[j] = uint64_t( 1 ) << ( j - 1u );
  }
  auto index = net.num_inputs + 1u;
  for ( auto const& [a, b] : net.steps )
  {
    if ( a >= index || b >= index )
    {
      throw std::invalid_argument( "linear_network: step fan-in out of range" );
    }
    forms[index++] = forms[a] ^ forms[b];
  }
  return forms;
}

/*! \brief True iff every output node computes its row of the matrix. */
inline bool linear_network_computes( linear_network const& net, linear_matrix const& matrix )
{
  if ( net.outputs.size() != matrix.rows.size() || net.num_inputs != matrix.cols )
  {
    return false;
  }
  auto const forms = linear_network_forms( net );
  for ( size_t l = 0u; l < matrix.rows.size(); ++l )
  {
    if ( forms.at( net.outputs[l] ) != matrix.rows[l] )
    {
      return false;
    }
  }
  return true;
}

/*! \brief The 2r+1 fan-in and output forms of an abstract XAG, in fixed order. */
inline linear_matrix extract_matrix( abstract_xag const& net )
{
  linear_matrix matrix;
  matrix.cols = net.num_inputs() + net.num_steps();
  for ( uint32_t l = 1u; l <= 2u * net.num_steps() + 1u; ++l )
  {
    matrix.rows.push_back( net.flat_set( l ).mask() );
  }
  return matrix;
}

/*! \brief Options for the shortest-linear-network search. */
struct slp_options
{
  /*! \brief Enforce that AND fan-in rows avoid later AND outputs (transitively). */
  bool ordering = false;
  /*! \brief Number of primary inputs; columns beyond are AND outputs (used with ordering). */
  uint32_t num_primary = 0u;
  /*! \brief Require every cone variable to survive into the computed form. */
  bool cancellation_free = false;
  /*! \brief Conflict budget per decision problem; 0 = unlimited. */
  uint64_t conflict_limit = 0u;
};

enum class slp_status
{
  sat,
  unsat,
  limit
};

struct slp_decision
{
  slp_status status = slp_status::unsat;
  linear_network net;
};

namespace detail
{

/*! \brief Rows that need a computing step (at least two ones); others resolve directly. */
inline bool row_is_trivial( uint64_t row )
{
  return linear_matrix::popcount( row ) < 2u;
}

inline uint32_t trivial_row_node( uint64_t row )
{
  return row == 0u ? 0u : __builtin_ctzll( row ) + 1u;
}

} // namespace detail

/*! \brief Decides whether `num_steps` XOR steps suffice for all rows of `matrix`.
 *
 * Selector variables pick two fan-ins per step; per-row output variables
 * assign each nontrivial row to exactly one step.  Auxiliary variables
 * materialize, for every column and step, whether the column occurs in
 * the step's computed form and whether it occurs anywhere in the step's
 * fan-in cone; the former must match the assigned row, the latter drives
 * the ordering and cancellation-free restrictions.
 */
inline slp_decision slp_decide( linear_matrix const& matrix, uint32_t num_steps, slp_options const& opts = {} )
{
  auto const cols = matrix.cols;
  auto const m = matrix.num_rows();
  std::vector<uint32_t> nontrivial;
  for ( uint32_t l = 0u; l < m; ++l )
  {
    if ( !detail::row_is_trivial( matrix.rows[l] ) )
    {
      nontrivial.push_back( l );
    }
  }

  slp_decision result;
  result.net.num_inputs = cols;
  result.net.outputs.assign( m, 0u );
  if ( nontrivial.empty() )
  {
    for ( uint32_t l = 0u; l < m; ++l )
    {
      result.net.outputs[l] = detail::trivial_row_node( matrix.rows[l] );
    }
    result.status = slp_status::sat;
    return result;
  }
  if ( num_steps == 0u )
  {
    result.status = slp_status::unsat;
    return result;
  }

  sat::solver_session session;
  if ( opts.conflict_limit != 0u )
  {
    session.set_conflict_limit( opts.conflict_limit );
  }

  /* b[t][j-1]: step t uses node j (inputs and earlier steps) */
  std::vector<std::vector<sat::literal>> b( num_steps );
  for ( uint32_t t = 0u; t < num_steps; ++t )
  {
    for ( uint32_t j = 1u; j < cols + t + 1u; ++j )
    {
      b[t].push_back( session.new_variable() );
    }
  }
  /* out[q][t]: nontrivial row q is computed by step t */
  std::vector<std::vector<sat::literal>> out( nontrivial.size() );
  for ( auto& row : out )
  {
    for ( uint32_t t = 0u; t < num_steps; ++t )
    {
      row.push_back( session.new_variable() );
    }
  }

  /* exactly two fan-ins per step */
  for ( uint32_t t = 0u; t < num_steps; ++t )
  {
    auto const width = static_cast<uint32_t>( b[t].size() );
    for ( uint32_t skip = 0u; skip < width; ++skip )
    {
      std::vector<sat::literal> clause;
      for ( uint32_t j = 0u; j < width; ++j )
      {
        if ( j != skip )
        {
          clause.push_back( b[t][j] );
        }
      }
      session.add_clause( clause ); /* at least two */
    }
    for ( uint32_t j1 = 0u; j1 < width; ++j1 )
    {
      for ( uint32_t j2 = j1 + 1u; j2 < width; ++j2 )
      {
        for ( uint32_t j3 = j2 + 1u; j3 < width; ++j3 )
        {
          session.add_clause( { ~b[t][j1], ~b[t][j2], ~b[t][j3] } ); /* at most two */
        }
      }
    }
  }

  /* exactly one computing step per nontrivial row */
  for ( auto& row : out )
  {
    session.add_clause( row );
    for ( uint32_t t1 = 0u; t1 < num_steps; ++t1 )
    {
      for ( uint32_t t2 = t1 + 1u; t2 < num_steps; ++t2 )
      {
        session.add_clause( { ~row[t1], ~row[t2] } );
      }
    }
  }

  /* occurs[j-1][t]: column j is in the form computed by step t;
   * used[j-1][t]: column j occurs anywhere in step t's fan-in cone */
  std::vector<std::vector<sat::literal>> occurs( cols ), used( cols );
  for ( uint32_t t = 0u; t < num_steps; ++t )
  {
    for ( uint32_t j = 1u; j <= cols; ++j )
    {
      std::vector<sat::literal> xor_terms{ b[t][j - 1u] };
      std::vector<sat::literal> or_terms{ b[t][j - 1u] };
      for ( uint32_t tp = 0u; tp < t; ++tp )
      {
        auto const uses_step = b[t][cols + tp];
        xor_terms.push_back( sat::encode_and( session, uses_step, occurs[j - 1u][tp] ) );
        or_terms.push_back( sat::encode_and( session, uses_step, used[j - 1u][tp] ) );
      }
      occurs[j - 1u].push_back( sat::encode_xor_chain( session, xor_terms ) );
      used[j - 1u].push_back( sat::encode_or( session, or_terms ) );
      if ( opts.cancellation_free )
      {
        sat::encode_equal( session, occurs[j - 1u][t], used[j - 1u][t] );
      }
    }
  }

  /* a step computing a row realizes exactly that linear form */
  for ( size_t q = 0u; q < nontrivial.size(); ++q )
  {
    auto const row = matrix.rows[nontrivial[q]];
    for ( uint32_t t = 0u; t < num_steps; ++t )
    {
      for ( uint32_t j = 1u; j <= cols; ++j )
      {
        auto const in_row = ( row >> ( j - 1u ) ) & 1u;
        session.add_clause( { ~out[q][t], in_row ? occurs[j - 1u][t] : ~occurs[j - 1u][t] } );
      }
    }
  }

  /* fan-in rows of AND gate g must not touch outputs of gates >= g */
  if ( opts.ordering )
  {
    for ( size_t q = 0u; q < nontrivial.size(); ++q )
    {
      auto const l = nontrivial[q] + 1u; /* 1-based row index */
      if ( l == m )
      {
        continue; /* the output form may use everything */
      }
      auto const gate = ( l + 1u ) / 2u;
      for ( uint32_t j = opts.num_primary + gate; j <= cols; ++j )
      {
        for ( uint32_t t = 0u; t < num_steps; ++t )
        {
          session.add_clause( { ~out[q][t], ~used[j - 1u][t] } );
        }
      }
    }
  }

  auto const outcome = session.solve();
  if ( outcome.status == sat::solve_status::limit )
  {
    result.status = slp_status::limit;
    return result;
  }
  if ( outcome.status == sat::solve_status::unsat )
  {
    result.status = slp_status::unsat;
    return result;
  }

  for ( uint32_t t = 0u; t < num_steps; ++t )
  {
    std::vector<uint32_t> fanins;
    for ( uint32_t j = 1u; j < cols + t + 1u; ++j )
    {
      if ( outcome.value( b[t][j - 1u] ) )
      {
        fanins.push_back( j );
      }
    }
    if ( fanins.size() != 2u )
    {
      throw std::logic_error( "slp_decide: model violates the two-fan-in constraint" );
    }
    result.net.steps.emplace_back( fanins[0], fanins[1] );
  }
  for ( uint32_t l = 0u; l < m; ++l )
  {
    if ( detail::row_is_trivial( matrix.rows[l] ) )
    {
      result.net.outputs[l] = detail::trivial_row_node( matrix.rows[l] );
    }
  }
  for ( size_t q = 0u; q < nontrivial.size(); ++q )
  {
    for ( uint32_t t = 0u; t < num_steps; ++t )
    {
      if ( outcome.value( out[q][t] ) )
      {
        result.net.outputs[nontrivial[q]] = cols + t + 1u;
        break;
      }
    }
  }
  result.status = slp_status::sat;
  return result;
}

/*! \brief Disjoint per-row XOR chains; the fallback when the exact search is cut short. */
inline linear_network naive_linear_network( linear_matrix const& matrix )
{
  linear_network net;
  net.num_inputs = matrix.cols;
  for ( auto const row : matrix.rows )
  {
    if ( detail::row_is_trivial( row ) )
    {
      net.outputs.push_back( detail::trivial_row_node( row ) );
      continue;
    }
    uint32_t acc = 0u;
    for ( uint32_t j = 1u; j <= matrix.cols; ++j )
    {
      if ( !( ( row >> ( j - 1u ) ) & 1u ) )
      {
        continue;
      }
      if ( acc == 0u )
      {
        acc = j;
      }
      else
      {
        net.steps.emplace_back( std::min( acc, j ), std::max( acc, j ) );
        acc = net.num_inputs + net.num_steps();
      }
    }
    net.outputs.push_back( acc );
  }
  return net;
}

struct slp_result
{
  linear_network net;
  bool optimal = true;
};

/*! \brief Minimal-step program, sweeping upward from max(popcount - 1).
 *
 * A conflict limit falls back to the sharing-free chain construction.
 */
inline slp_result slp_minimize( linear_matrix const& matrix, slp_options const& opts = {} )
{
  uint32_t lower = 0u;
  for ( auto const row : matrix.rows )
  {
    auto const pc = linear_matrix::popcount( row );
    lower = std::max( lower, pc > 0u ? pc - 1u : 0u );
  }
  for ( auto steps = lower;; ++steps )
  {
    auto decision = slp_decide( matrix, steps, opts );
    if ( decision.status == slp_status::sat )
    {
      return { std::move( decision.net ), true };
    }
    if ( decision.status == slp_status::limit )
    {
      return { naive_linear_network( matrix ), false };
    }
  }
}

/*! \brief Interleaves the XOR program with the AND gates into a concrete XAG.
 *
 * Gates and XOR steps are emitted in dependency order: an AND gate as
 * soon as both of its fan-in forms exist, an XOR step as soon as its
 * operands exist.  The ordering restrictions of `slp_decide` guarantee
 * such an order exists.
 */
inline xag rebuild_xag( abstract_xag const& net, linear_network const& lin )
{
  auto const n = net.num_inputs();
  auto const r = net.num_steps();
  if ( lin.num_inputs != n + r || lin.outputs.size() != 2u * r + 1u )
  {
    throw std::invalid_argument( "rebuild_xag: linear network does not match the abstract XAG" );
  }
  xag result( n );
  std::vector<uint32_t> gate_node( r, 0u );                 /* AND gate -> node in result */
  std::vector<uint32_t> step_node( lin.num_steps(), 0u );   /* XOR step -> node in result */
  std::vector<bool> gate_done( r, false ), step_done( lin.num_steps(), false );

  auto const column_node = [&]( uint32_t col ) -> std::optional<uint32_t> {
    if ( col <= n )
    {
      return col;
    }
    return gate_done[col - n - 1u] ? std::optional<uint32_t>( gate_node[col - n - 1u] ) : std::nullopt;
  };
  auto const lin_node = [&]( uint32_t node ) -> std::optional<uint32_t> {
    if ( node == 0u )
    {
      return std::nullopt;
    }
    if ( node <= lin.num_inputs )
    {
      return column_node( node );
    }
    auto const t = node - lin.num_inputs - 1u;
    return step_done[t] ? std::optional<uint32_t>( step_node[t] ) : std::nullopt;
  };

  auto emitted = 0u;
  auto const total = r + lin.num_steps();
  while ( emitted < total )
  {
    auto progress = false;
    /* AND gates first, in index order, as soon as both fan-in forms exist */
    for ( uint32_t g = 0u; g < r; ++g )
    {
      if ( gate_done[g] )
      {
        continue;
      }
      auto const a = lin_node( lin.outputs[2u * g] );
      auto const d = lin_node( lin.outputs[2u * g + 1u] );
      if ( !a || !d )
      {
        continue;
      }
      if ( *a == *d )
      {
        throw std::invalid_argument( "rebuild_xag: AND gate with equal fan-ins" );
      }
      gate_node[g] = result.add_and( std::min( *a, *d ), std::max( *a, *d ) );
      gate_done[g] = true;
      ++emitted;
      progress = true;
    }
    for ( uint32_t t = 0u; t < lin.num_steps(); ++t )
    {
      if ( step_done[t] )
      {
        continue;
      }
      auto const a = lin_node( lin.steps[t].first );
      auto const d = lin_node( lin.steps[t].second );
      if ( !a || !d )
      {
        continue;
      }
      step_node[t] = result.add_xor( std::min( *a, *d ), std::max( *a, *d ) );
      step_done[t] = true;
      ++emitted;
      progress = true;
      break; /* re-check AND gates before later XOR steps */
    }
    if ( !progress )
    {
      throw std::logic_error( "rebuild_xag: no valid interleaving (ordering constraints violated)" );
    }
  }
  auto const out = lin_node( lin.outputs[2u * r] );
  result.set_output( out.value_or( 0u ), net.output_inverted() );
  return result;
}

struct support_minimal_result
{
  abstract_xag net{ 1u };
  bool support_optimal = true;
  uint32_t support = 0u;
};

/*! \brief Searches for an r-step abstract XAG with minimal total fan-in support.
 *
 * Starting from any witness, a sorter network over all selector
 * variables bounds the number that may be true, and the bound tightens
 * to the support of each new solution until the instance becomes
 * unsatisfiable.  Conflict limits apply to the tightening solves only;
 * hitting one returns the best solution found, flagged non-optimal.
 */
inline support_minimal_result heuristic_min_support( truth_table const& f, uint32_t r,
                                                     encoding_options const& opts = {},
                                                     uint64_t conflict_limit = 0u,
                                                     uint32_t max_iterations = 50u )
{
  mc_instance inst( f, r, opts );
  inst.constrain_all();
  auto outcome = inst.session().solve();
  if ( outcome.status != sat::solve_status::sat )
  {
    throw std::invalid_argument( "heuristic_min_support: no solution at the given step count" );
  }
  support_minimal_result result;
  result.net = inst.extract( outcome );
  result.support = inst.support_of( outcome );
  auto const sorted = sat::encode_sorter( inst.session(), inst.structure_literals() );
  if ( conflict_limit != 0u )
  {
    inst.session().set_conflict_limit( conflict_limit );
  }
  for ( auto iteration = 1u; iteration < max_iterations; ++iteration )
  {
    if ( result.support == 0u )
    {
      break;
    }
    sat::constrain_at_most( inst.session(), sorted, result.support );
    outcome = inst.session().solve();
    if ( outcome.status == sat::solve_status::unsat )
    {
      return result;
    }
    if ( outcome.status == sat::solve_status::limit )
    {
      result.support_optimal = false;
      return result;
    }
    result.net = inst.extract( outcome );
    result.support = inst.support_of( outcome );
  }
  result.support_optimal = false; /* iteration cap reached before the proof */
  return result;
}

/*! \brief Matrix text format: `m n` header, then one row of n bits per line. */
inline linear_matrix parse_matrix( std::istream& is )
{
  linear_matrix matrix;
  uint32_t m = 0u;
  if ( !( is >> m >> matrix.cols ) )
  {
    throw std::invalid_argument( "parse_matrix: missing dimension header" );
  }
  if ( matrix.cols > 64u )
  {
    throw std::invalid_argument( "parse_matrix: at most 64 columns supported" );
  }
  for ( uint32_t l = 0u; l < m; ++l )
  {
    std::string bits;
    if ( !( is >> bits ) || bits.size() != matrix.cols )
    {
      throw std::invalid_argument( "parse_matrix: malformed row " + std::to_string( l + 1u ) );
    }
    uint64_t row = 0u;
    for ( uint32_t j = 0u; j < matrix.cols; ++j )
    {
      if ( bits[j] == '1' )
      {
        row |= uint64_t( 1 ) << j;
      }
      else if ( bits[j] != '0' )
      {
        throw std::invalid_argument( "parse_matrix: rows must consist of 0s and 1s" );
      }
    }
    matrix.rows.push_back( row );
  }
  return matrix;
}

inline void write_matrix( std::ostream& os, linear_matrix const& matrix )
{
  os << matrix.num_rows() << ' ' << matrix.cols << '\n';
  for ( auto const row : matrix.rows )
  {
    for ( uint32_t j = 0u; j < matrix.cols; ++j )
    {
      os << ( ( row >> j ) & 1u );
    }
    os << '\n';
  }
}

} // namespace mcsyn
