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
  \file mc_encoding.hpp
  \brief SAT encoding of "is there an abstract XAG with r AND steps for f?"

  Structure variables `s_{cij}` select the fan-in sets of each AND step,
  `s_j` selects the output form, and `f_{ix}` carries the value of step i
  under input assignment x.  Gate and output clauses tie the two groups
  together per assignment, so a CEGAR loop can constrain assignments one
  counterexample at a time.  The optional constraint families prune the
  search space without removing every optimum.
*/

#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "abstract_xag.hpp"
#include "sat/encodings.hpp"
#include "sat/session.hpp"
#include "truth_table.hpp"

namespace mcsyn
{

/*! \brief Independent switches for each constraint family. */
struct encoding_options
{
  bool nonconstant_fanin = true;
  bool commutativity = true;
  bool symmetric_variables = true;
  bool all_used = true;
  bool subset_free = true;
  bool multilevel_subset = true;

  static encoding_options none()
  {
    return { false, false, false, false, false, false };
  }
};

/*! \brief One decision problem: abstract XAG with a fixed step budget.
 *
 * All structure variables are allocated at construction and the enabled
 * constraint families are encoded immediately; they do not depend on the
 * set of constrained assignments.  `constrain_assignment` is the only
 * part that grows with the refinement set X, so a session is reused
 * across CEGAR iterations.
 */
class mc_instance
{
public:
  mc_instance( truth_table const& f, uint32_t num_steps, encoding_options const& opts = {} )
      : f_( f ),
        n_( f.num_vars() ),
        r_( num_steps ),
        opts_( opts )
  {
    if ( !is_normal( f_ ) )
    {
      throw std::invalid_argument( "mc_instance: function must be normal" );
    }
    /* fan-in selectors s_{cij}, step i = n+k+1 over positions j = 1..n+k */
    s_vars_.resize( r_ );
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      for ( auto c = 0u; c < 2u; ++c )
      {
        s_vars_[k][c].reserve( n_ + k );
        for ( uint32_t j = 1u; j <= n_ + k; ++j )
        {
          s_vars_[k][c].push_back( session_.new_variable() );
        }
      }
    }
    /* output selectors s_j over positions 1..n+r */
    out_vars_.reserve( n_ + r_ );
    for ( uint32_t j = 1u; j <= n_ + r_; ++j )
    {
      out_vars_.push_back( session_.new_variable() );
    }
    /* step values f_{ix} for every assignment 0 < x < 2^n */
    f_vars_.resize( r_ );
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      f_vars_[k].reserve( f_.num_bits() - 1u );
      for ( uint64_t x = 1u; x < f_.num_bits(); ++x )
      {
        f_vars_[k].push_back( session_.new_variable() );
      }
    }

    if ( opts_.nonconstant_fanin && !f_.is_constant_zero() )
    {
      add_nonconstant_fanin();
    }
    if ( opts_.commutativity )
    {
      add_commutativity();
    }
    if ( opts_.symmetric_variables )
    {
      add_symmetric_breaking( symmetric_pairs( f_ ) );
    }
    if ( opts_.all_used )
    {
      add_all_used( essential_variables( f_ ) );
    }
    if ( opts_.subset_free )
    {
      add_subset_free();
    }
    if ( opts_.multilevel_subset )
    {
      add_multilevel_subset();
    }
  }

  uint32_t num_inputs() const { return n_; }
  uint32_t num_steps() const { return r_; }
  truth_table const& function() const { return f_; }
  encoding_options const& options() const { return opts_; }
  sat::solver_session& session() { return session_; }
  sat::solver_session const& session() const { return session_; }
  std::set<uint32_t> const& constrained_assignments() const { return constrained_; }

  /*! \brief Width of the flattened set view for l in [1, 2r+1]. */
  uint32_t hat_width( uint32_t l ) const
  {
    check_hat_index( l );
    return l == 2u * r_ + 1u ? n_ + r_ : n_ + ( l - 1u ) / 2u;
  }

  /*! \brief Alias into the selector variables: position j of the l-th flattened set. */
  sat::literal hat_literal( uint32_t l, uint32_t j ) const
  {
    check_hat_index( l );
    if ( j < 1u || j > hat_width( l ) )
    {
      throw std::out_of_range( "mc_instance: flattened set position out of range" );
    }
    if ( l == 2u * r_ + 1u )
    {
      return out_vars_[j - 1u];
    }
    return s_vars_[( l - 1u ) / 2u][( l - 1u ) % 2u][j - 1u];
  }

  /*! \brief All selector literals in canonical order (l ascending, then position). */
  std::vector<sat::literal> structure_literals() const
  {
    std::vector<sat::literal> lits;
    for ( uint32_t l = 1u; l <= 2u * r_ + 1u; ++l )
    {
      for ( uint32_t j = 1u; j <= hat_width( l ); ++j )
      {
        lits.push_back( hat_literal( l, j ) );
      }
    }
    return lits;
  }

  /*! \brief Ties step and output values to the structure for one input assignment. */
  void constrain_assignment( uint64_t x )
  {
    if ( x == 0u || x >= f_.num_bits() )
    {
      throw std::out_of_range( "constrain_assignment: assignment out of range" );
    }
    if ( !constrained_.insert( static_cast<uint32_t>( x ) ).second )
    {
      throw std::invalid_argument( "constrain_assignment: assignment already constrained" );
    }
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      std::array<sat::literal, 2> fanin_value{};
      for ( auto c = 0u; c < 2u; ++c )
      {
        auto const terms = selected_value_terms( s_vars_[k][c], n_ + k, x );
        fanin_value[c] = sat::encode_xor_chain( session_, terms );
      }
      auto const value = sat::encode_and( session_, fanin_value[0], fanin_value[1] );
      sat::encode_equal( session_, f_vars_[k][x - 1u], value );
    }
    auto const out_terms = selected_value_terms( out_vars_, n_ + r_, x );
    auto const out_value = sat::encode_xor_chain( session_, out_terms );
    session_.add_clause( { f_.bit( x ) ? out_value : ~out_value } );
  }

  void constrain_all()
  {
    for ( uint64_t x = 1u; x < f_.num_bits(); ++x )
    {
      if ( !constrained_.count( static_cast<uint32_t>( x ) ) )
      {
        constrain_assignment( x );
      }
    }
  }

  /*! \brief Every linear form must select at least one index. */
  void add_nonconstant_fanin()
  {
    if ( f_.is_constant_zero() )
    {
      throw std::invalid_argument( "add_nonconstant_fanin: not applicable to the constant-0 function" );
    }
    for ( uint32_t l = 1u; l <= 2u * r_ + 1u; ++l )
    {
      std::vector<sat::literal> clause;
      for ( uint32_t j = 1u; j <= hat_width( l ); ++j )
      {
        clause.push_back( hat_literal( l, j ) );
      }
      session_.add_clause( clause );
    }
  }

  /*! \brief Orders the two fan-in sets of each step to break AND commutativity. */
  void add_commutativity()
  {
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      sat::encode_lex_smaller( session_, s_vars_[k][0], s_vars_[k][1] );
    }
  }

  /*! \brief For each symmetric pair (j, k), variable j must be used no later than k. */
  void add_symmetric_breaking( std::vector<std::pair<uint32_t, uint32_t>> const& pairs )
  {
    for ( auto const& [j, k] : pairs )
    {
      for ( uint32_t l = 1u; l <= 2u * r_ + 1u; ++l )
      {
        std::vector<sat::literal> clause{ ~hat_literal( l, k ) };
        for ( uint32_t lp = 1u; lp <= l; ++lp )
        {
          clause.push_back( hat_literal( lp, j ) );
        }
        session_.add_clause( clause );
      }
    }
  }

  /*! \brief Every essential variable and every AND step appears in some set. */
  void add_all_used( std::vector<uint32_t> const& essential )
  {
    for ( auto const i : essential )
    {
      std::vector<sat::literal> clause;
      for ( uint32_t l = 1u; l <= 2u * r_ + 1u; ++l )
      {
        clause.push_back( hat_literal( l, i ) );
      }
      session_.add_clause( clause );
    }
    for ( uint32_t g = 1u; g <= r_; ++g )
    {
      std::vector<sat::literal> clause;
      for ( uint32_t l = 2u * g + 1u; l <= 2u * r_ + 1u; ++l )
      {
        clause.push_back( hat_literal( l, n_ + g ) );
      }
      session_.add_clause( clause );
    }
  }

  /*! \brief Neither fan-in set of a step may contain the other. */
  void add_subset_free()
  {
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      for ( auto c = 0u; c < 2u; ++c )
      {
        std::vector<sat::literal> difference;
        for ( uint32_t j = 0u; j < n_ + k; ++j )
        {
          difference.push_back( sat::encode_and( session_, s_vars_[k][c][j], ~s_vars_[k][1u - c][j] ) );
        }
        session_.add_clause( difference );
      }
    }
  }

  /*! \brief Rules out foldable subset patterns across step boundaries.
   *
   * If a form contains step i and its restriction below i is contained
   * in both fan-in sets of step i, the restriction must equal their
   * intersection; otherwise the structure is equivalent to one already
   * in the search space.
   */
  void add_multilevel_subset()
  {
    /* products s_{1ij} * s_{2ij}, cached per step and position */
    std::vector<std::vector<sat::literal>> intersection( r_ );
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      intersection[k].reserve( n_ + k );
      for ( uint32_t j = 0u; j < n_ + k; ++j )
      {
        intersection[k].push_back( sat::encode_and( session_, s_vars_[k][0][j], s_vars_[k][1][j] ) );
      }
    }
    for ( uint32_t l = 1u; l <= 2u * r_ + 1u; ++l )
    {
      auto const width = hat_width( l );
      for ( uint32_t i = n_ + 1u; i <= width; ++i )
      {
        auto const k = i - n_ - 1u; /* step owning index i */
        /* violation witnesses m_j: position j in the form but not in the intersection */
        std::vector<sat::literal> prefix{ ~hat_literal( l, i ) };
        for ( uint32_t j = 1u; j < i; ++j )
        {
          auto const m = session_.new_variable();
          session_.add_clause( { ~m, hat_literal( l, j ) } );
          session_.add_clause( { ~m, ~intersection[k][j - 1u] } );
          prefix.push_back( m );
        }
        for ( uint32_t j = 1u; j < i; ++j )
        {
          auto clause = prefix;
          clause.push_back( ~intersection[k][j - 1u] );
          clause.push_back( hat_literal( l, j ) );
          session_.add_clause( clause );
        }
      }
    }
  }

  /*! \brief Reads the fan-in and output sets out of a satisfying model. */
  abstract_xag extract( sat::solve_outcome const& outcome ) const
  {
    if ( outcome.status != sat::solve_status::sat )
    {
      throw std::invalid_argument( "extract: outcome is not a satisfying model" );
    }
    abstract_xag net( n_ );
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      index_set s1, s2;
      for ( uint32_t j = 1u; j <= n_ + k; ++j )
      {
        if ( outcome.value( s_vars_[k][0][j - 1u] ) )
        {
          s1.insert( j );
        }
        if ( outcome.value( s_vars_[k][1][j - 1u] ) )
        {
          s2.insert( j );
        }
      }
      net.add_step( s1, s2 );
    }
    index_set out;
    for ( uint32_t j = 1u; j <= n_ + r_; ++j )
    {
      if ( outcome.value( out_vars_[j - 1u] ) )
      {
        out.insert( j );
      }
    }
    net.set_output( out );
    return net;
  }

  /*! \brief Number of selector literals set in the model (the total support). */
  uint32_t support_of( sat::solve_outcome const& outcome ) const
  {
    uint32_t support = 0u;
    for ( auto const& l : structure_literals() )
    {
      support += outcome.value( l ) ? 1u : 0u;
    }
    return support;
  }

  /*! \brief Excludes the model's selector assignment from future solutions. */
  void block_solution( sat::solve_outcome const& outcome )
  {
    std::vector<sat::literal> clause;
    for ( auto const& l : structure_literals() )
    {
      clause.push_back( outcome.value( l ) ? ~l : l );
    }
    session_.add_clause( clause );
  }

  /*! \brief Sidecar map of encoding variables, for debugging DIMACS dumps. */
  void export_variable_map( std::ostream& os ) const
  {
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      for ( auto c = 0u; c < 2u; ++c )
      {
        for ( uint32_t j = 1u; j <= n_ + k; ++j )
        {
          os << "s " << c + 1u << ' ' << n_ + k + 1u << ' ' << j << " -> " << s_vars_[k][c][j - 1u].var << '\n';
        }
      }
    }
    for ( uint32_t j = 1u; j <= n_ + r_; ++j )
    {
      os << "out " << j << " -> " << out_vars_[j - 1u].var << '\n';
    }
    for ( uint32_t k = 0u; k < r_; ++k )
    {
      for ( uint64_t x = 1u; x < f_.num_bits(); ++x )
      {
        os << "f " << n_ + k + 1u << ' ' << x << " -> " << f_vars_[k][x - 1u].var << '\n';
      }
    }
  }

private:
  void check_hat_index( uint32_t l ) const
  {
    if ( l < 1u || l > 2u * r_ + 1u )
    {
      throw std::out_of_range( "mc_instance: flattened set index out of range" );
    }
  }

  /*! \brief Terms s_j * f_{jx} of a selected XOR, with input values substituted as constants. */
  std::vector<sat::literal> selected_value_terms( std::vector<sat::literal> const& selectors, uint32_t width, uint64_t x )
  {
    std::vector<sat::literal> terms;
    for ( uint32_t j = 1u; j <= width; ++j )
    {
      if ( j <= n_ )
      {
        if ( ( x >> ( j - 1u ) ) & 1u )
        {
          terms.push_back( selectors[j - 1u] );
        }
      }
      else
      {
        terms.push_back( sat::encode_and( session_, selectors[j - 1u], f_vars_[j - n_ - 1u][x - 1u] ) );
      }
    }
    return terms;
  }

  truth_table f_;
  uint32_t n_;
  uint32_t r_;
  encoding_options opts_;
  sat::solver_session session_;
  std::vector<std::array<std::vector<sat::literal>, 2>> s_vars_;
  std::vector<sat::literal> out_vars_;
  std::vector<std::vector<sat::literal>> f_vars_;
  std::set<uint32_t> constrained_;
};

} // namespace mcsyn
