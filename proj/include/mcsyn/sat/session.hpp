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
  \file session.hpp
  \brief Incremental SAT session: typed literals, assumption solving, conflict limits
*/

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "solver.hpp"

namespace mcsyn::sat
{

/*! \brief A literal over a 1-based variable id. */
struct literal
{
  uint32_t var;
  bool negated;

  literal operator~() const { return { var, !negated }; }
  bool operator==( literal const& other ) const { return var == other.var && negated == other.negated; }
  bool operator!=( literal const& other ) const { return !( *this == other ); }
};

enum class solve_status
{
  sat,
  unsat,
  limit
};

/*! \brief Result of a solve call; the model is total over all session variables when SAT. */
struct solve_outcome
{
  solve_status status;
  std::vector<bool> model; /* indexed by variable id, entry 0 unused */

  bool value( literal l ) const { return model.at( l.var ) != l.negated; }
};

/*! \brief Owns a solver instance, allocates variables, and tracks statistics.
 *
 * Variable ids are dense, 1-based, and issued in strictly increasing
 * order, so identical call sequences produce identical formulas.  A
 * session is single-threaded; independent sessions may run concurrently.
 */
class solver_session
{
public:
  literal new_variable()
  {
    solver_.add_variable();
    return { ++num_vars_, false };
  }

  uint32_t num_variables() const { return num_vars_; }
  uint64_t num_clauses() const { return num_clauses_; }

  void add_clause( std::vector<literal> const& lits )
  {
    std::vector<uint32_t> internal;
    internal.reserve( lits.size() );
    for ( auto const& l : lits )
    {
      if ( l.var == 0u || l.var > num_vars_ )
      {
        throw std::invalid_argument( "add_clause: literal references unallocated variable" );
      }
      internal.push_back( detail::cdcl_solver::make_lit( l.var - 1u, l.negated ) );
    }
    ++num_clauses_;
    if ( recording_ )
    {
      recorded_.push_back( lits );
    }
    solver_.add_clause( std::move( internal ) );
  }

  void add_clause( std::initializer_list<literal> lits ) { add_clause( std::vector<literal>( lits ) ); }

  void set_conflict_limit( std::optional<uint64_t> limit ) { conflict_limit_ = limit; }
  std::optional<uint64_t> conflict_limit() const { return conflict_limit_; }

  solve_outcome solve( std::vector<literal> const& assumptions = {} )
  {
    std::vector<uint32_t> internal;
    internal.reserve( assumptions.size() );
    for ( auto const& l : assumptions )
    {
      internal.push_back( detail::cdcl_solver::make_lit( l.var - 1u, l.negated ) );
    }
    ++solve_calls_;
    auto const before = solver_.num_conflicts();
    auto const res = solver_.solve( internal, conflict_limit_.value_or( 0u ) );
    last_conflicts_ = solver_.num_conflicts() - before;
    solve_outcome outcome;
    switch ( res )
    {
    case detail::cdcl_solver::result::sat:
      outcome.status = solve_status::sat;
      outcome.model.resize( num_vars_ + 1u, false );
      for ( uint32_t v = 1u; v <= num_vars_; ++v )
      {
        outcome.model[v] = solver_.model_value( v - 1u );
      }
      break;
    case detail::cdcl_solver::result::unsat:
      outcome.status = solve_status::unsat;
      break;
    case detail::cdcl_solver::result::unknown:
      outcome.status = solve_status::limit;
      break;
    }
    return outcome;
  }

  /*! \brief Literal that is constant false in every model (allocated on first use). */
  literal false_literal()
  {
    if ( !false_lit_ )
    {
      false_lit_ = new_variable();
      add_clause( { ~*false_lit_ } );
    }
    return *false_lit_;
  }

  uint64_t num_solve_calls() const { return solve_calls_; }
  uint64_t last_solve_conflicts() const { return last_conflicts_; }
  uint64_t total_conflicts() const { return solver_.num_conflicts(); }
  uint64_t total_decisions() const { return solver_.num_decisions(); }
  uint64_t total_propagations() const { return solver_.num_propagations(); }

  /*! \brief Record added clauses for later DIMACS export. */
  void enable_recording() { recording_ = true; }
  bool recording() const { return recording_; }

  void export_dimacs( std::ostream& os ) const
  {
    if ( !recording_ )
    {
      throw std::logic_error( "export_dimacs: recording was not enabled" );
    }
    os << "p cnf " << num_vars_ << ' ' << recorded_.size() << '\n';
    for ( auto const& clause : recorded_ )
    {
      for ( auto const& l : clause )
      {
        if ( l.negated )
        {
          os << '-';
        }
        os << l.var << ' ';
      }
      os << "0\n";
    }
  }

private:
  detail::cdcl_solver solver_;
  uint32_t num_vars_ = 0u;
  uint64_t num_clauses_ = 0u;
  std::optional<uint64_t> conflict_limit_;
  std::optional<literal> false_lit_;
  bool recording_ = false;
  std::vector<std::vector<literal>> recorded_;
  uint64_t solve_calls_ = 0u;
  uint64_t last_conflicts_ = 0u;
};

} // namespace mcsyn::sat
