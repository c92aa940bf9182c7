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
  \file synthesis.hpp
  \brief Multiplicative complexity search: direct sweep, CEGAR, and solution enumeration
*/

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "abstract_xag.hpp"
#include "linear_program.hpp"
#include "mc_encoding.hpp"
#include "truth_table.hpp"
#include "xag.hpp"

namespace mcsyn
{

enum class strategy_kind
{
  direct,
  cegar
};

enum class synthesis_status
{
  proven_optimal,
  upper_bound /* a conflict limit interrupted an infeasibility proof below */
};

struct synthesis_stats
{
  uint32_t solve_calls = 0u;
  uint64_t conflicts = 0u;
  uint32_t constrained_assignments = 0u;
  bool limit_hit = false;
  double millis = 0.0;
};

struct synthesis_result
{
  uint32_t mc = 0u;
  abstract_xag witness{ 1u };
  synthesis_status status = synthesis_status::proven_optimal;
  synthesis_stats stats;
};

/*! \brief Budget knobs for a search; a conflict limit of 0 means unlimited. */
struct search_limits
{
  uint64_t conflict_limit = 0u;
  std::optional<uint32_t> r_high;
};

/*! \brief Lower bound on the multiplicative complexity: algebraic degree minus one. */
inline uint32_t mc_lower_bound( truth_table const& f )
{
  auto const d = anf_degree( f );
  return d > 1u ? d - 1u : 0u;
}

namespace detail
{

class scoped_timer
{
public:
  explicit scoped_timer( double& target )
      : target_( target ), start_( std::chrono::steady_clock::now() )
  {
  }

  ~scoped_timer()
  {
    auto const stop = std::chrono::steady_clock::now();
    target_ += std::chrono::duration<double, std::milli>( stop - start_ ).count();
  }

private:
  double& target_;
  std::chrono::steady_clock::time_point start_;
};

inline void check_r_high( uint32_t r, search_limits const& limits )
{
  if ( limits.r_high && r > *limits.r_high )
  {
    throw std::runtime_error( "mc search exceeded the configured step budget" );
  }
}

} // namespace detail

/*! \brief Sweeps r upward, constraining every input assignment at once.
 *
 * The first satisfiable step budget yields the witness.  When a conflict
 * limit interrupts an unsatisfiability proof, the sweep continues upward
 * and a later witness is only an upper bound.
 */
inline synthesis_result find_mc_direct( truth_table const& f, uint32_t r_low,
                                        encoding_options const& opts = {},
                                        search_limits const& limits = {} )
{
  if ( !is_normal( f ) )
  {
    throw std::invalid_argument( "find_mc_direct: function must be normal" );
  }
  synthesis_result result;
  detail::scoped_timer timer( result.stats.millis );
  for ( auto r = r_low;; ++r )
  {
    detail::check_r_high( r, limits );
    mc_instance inst( f, r, opts );
    inst.constrain_all();
    if ( limits.conflict_limit != 0u )
    {
      inst.session().set_conflict_limit( limits.conflict_limit );
    }
    auto const outcome = inst.session().solve();
    ++result.stats.solve_calls;
    result.stats.conflicts += inst.session().last_solve_conflicts();
    result.stats.constrained_assignments += static_cast<uint32_t>( inst.constrained_assignments().size() );
    if ( outcome.status == sat::solve_status::sat )
    {
      result.mc = r;
      result.witness = inst.extract( outcome );
      result.status = result.stats.limit_hit ? synthesis_status::upper_bound : synthesis_status::proven_optimal;
      return result;
    }
    if ( outcome.status == sat::solve_status::limit )
    {
      result.stats.limit_hit = true;
    }
  }
}

/*! \brief Counterexample-guided search: constrain only assignments that
 * distinguish the candidate from the target, smallest first.
 */
inline synthesis_result find_mc_cegar( truth_table const& f, uint32_t r_low,
                                       encoding_options const& opts = {},
                                       search_limits const& limits = {} )
{
  if ( !is_normal( f ) )
  {
    throw std::invalid_argument( "find_mc_cegar: function must be normal" );
  }
  synthesis_result result;
  detail::scoped_timer timer( result.stats.millis );
  for ( auto r = r_low;; ++r )
  {
    detail::check_r_high( r, limits );
    mc_instance inst( f, r, opts );
    if ( limits.conflict_limit != 0u )
    {
      inst.session().set_conflict_limit( limits.conflict_limit );
    }
    while ( true )
    {
      auto const outcome = inst.session().solve();
      ++result.stats.solve_calls;
      result.stats.conflicts += inst.session().last_solve_conflicts();
      if ( outcome.status == sat::solve_status::unsat )
      {
        break;
      }
      if ( outcome.status == sat::solve_status::limit )
      {
        result.stats.limit_hit = true;
        break;
      }
      auto candidate = inst.extract( outcome );
      auto const simulated = simulate( candidate );
      if ( simulated == f )
      {
        result.mc = r;
        result.witness = std::move( candidate );
        result.status = result.stats.limit_hit ? synthesis_status::upper_bound : synthesis_status::proven_optimal;
        result.stats.constrained_assignments += static_cast<uint32_t>( inst.constrained_assignments().size() );
        return result;
      }
      uint64_t x = 1u;
      while ( simulated.bit( x ) == f.bit( x ) )
      {
        ++x;
      }
      inst.constrain_assignment( x );
    }
    result.stats.constrained_assignments += static_cast<uint32_t>( inst.constrained_assignments().size() );
  }
}

struct enumeration_result
{
  std::vector<abstract_xag> solutions;
  bool exhausted = false;  /* blocking ran until unsatisfiable: all solutions found */
  bool infeasible = false; /* no solution at the given step budget at all */
  bool limit_hit = false;
};

/*! \brief Enumerates structurally distinct solutions at a known-feasible budget.
 *
 * After each model, one blocking clause over all selector variables
 * excludes exactly that structure, so auxiliary variables never cause a
 * solution to be reported twice.
 */
inline enumeration_result enumerate_optimum( truth_table const& f, uint32_t r, uint32_t limit,
                                             encoding_options const& opts = {},
                                             uint64_t conflict_limit = 0u )
{
  if ( !is_normal( f ) )
  {
    throw std::invalid_argument( "enumerate_optimum: function must be normal" );
  }
  if ( limit < 1u )
  {
    throw std::invalid_argument( "enumerate_optimum: limit must be at least 1" );
  }
  enumeration_result result;
  mc_instance inst( f, r, opts );
  inst.constrain_all();
  if ( conflict_limit != 0u )
  {
    inst.session().set_conflict_limit( conflict_limit );
  }
  while ( result.solutions.size() < limit )
  {
    auto const outcome = inst.session().solve();
    if ( outcome.status == sat::solve_status::unsat )
    {
      result.exhausted = true;
      result.infeasible = result.solutions.empty();
      break;
    }
    if ( outcome.status == sat::solve_status::limit )
    {
      result.limit_hit = true;
      break;
    }
    result.solutions.push_back( inst.extract( outcome ) );
    inst.block_solution( outcome );
  }
  return result;
}

/*! \brief How to spend effort on XOR gates once the AND count is optimal. */
enum class xor_mode
{
  none,           /* first witness, sharing-free translation */
  enumerate_best, /* enumerate solutions, keep the one with the cheapest translation */
  heuristic,      /* sorter-based support minimization */
  heuristic_sat   /* support minimization plus exact shortest-linear-network search */
};

struct minimize_config
{
  strategy_kind strategy = strategy_kind::cegar;
  encoding_options encoding{};
  xor_mode xor_opt = xor_mode::none;
  uint32_t enumeration_limit = 50u;
  /* conflict budgets kick in only after a first optimum is known */
  uint64_t abstract_conflict_limit = 50000u;
  uint64_t linear_conflict_limit = 500000u;
  std::optional<uint32_t> r_low;
  std::optional<uint32_t> r_high;
};

struct minimize_result
{
  synthesis_result search;
  bool inverted = false;
  abstract_xag best_abstract{ 1u };
  xag network{ 1u };
  bool xor_optimal = false; /* the exact linear search proved its step count */
};

/*! \brief Top-level driver: normalize, find the optimum AND count, then shrink XOR gates.
 *
 * The search itself runs without conflict limits; limits apply to the
 * enumeration, support-tightening, and linear-program stages.  The
 * returned network realizes the original (possibly non-normal) function
 * through its output inversion flag.
 */
inline minimize_result minimize( truth_table const& f_raw, minimize_config const& config = {} )
{
  minimize_result result;
  auto const [f, inverted] = normalize( f_raw );
  result.inverted = inverted;
  auto const r_low = config.r_low ? *config.r_low : mc_lower_bound( f );
  search_limits const limits{ 0u, config.r_high };
  result.search = config.strategy == strategy_kind::direct ? find_mc_direct( f, r_low, config.encoding, limits )
                                                           : find_mc_cegar( f, r_low, config.encoding, limits );
  result.best_abstract = result.search.witness;

  switch ( config.xor_opt )
  {
  case xor_mode::none:
    break;
  case xor_mode::enumerate_best:
  {
    auto const enumerated = enumerate_optimum( f, result.search.mc, config.enumeration_limit,
                                               config.encoding, config.abstract_conflict_limit );
    for ( auto const& candidate : enumerated.solutions )
    {
      if ( xor_cost( candidate ) < xor_cost( result.best_abstract ) )
      {
        result.best_abstract = candidate;
      }
    }
    break;
  }
  case xor_mode::heuristic:
  case xor_mode::heuristic_sat:
  {
    auto const support = heuristic_min_support( f, result.search.mc, config.encoding,
                                                config.abstract_conflict_limit, config.enumeration_limit );
    result.best_abstract = support.net;
    break;
  }
  }

  if ( config.xor_opt == xor_mode::heuristic_sat )
  {
    auto const matrix = extract_matrix( result.best_abstract );
    slp_options options;
    options.ordering = true;
    options.num_primary = f.num_vars();
    options.conflict_limit = config.linear_conflict_limit;
    auto lp = slp_minimize( matrix, options );
    result.network = rebuild_xag( result.best_abstract, lp.net );
    result.xor_optimal = lp.optimal;
  }
  else
  {
    result.network = to_xag( result.best_abstract );
  }
  if ( inverted )
  {
    result.network.set_output( result.network.output(), true );
  }
  return result;
}

} // namespace mcsyn
