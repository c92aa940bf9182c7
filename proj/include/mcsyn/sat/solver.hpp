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
  \file solver.hpp
  \brief Embedded CDCL SAT solver

  A compact conflict-driven solver with two-watched-literal propagation,
  VSIDS branching, phase saving, Luby restarts, first-UIP learning with
  basic clause minimization, and activity-based learnt-clause deletion.
  It supports incremental clause addition between calls, solving under
  assumptions, and per-call conflict budgets.  Runs are deterministic:
  the same call sequence always explores the same search tree.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <unordered_map>
#include <vector>

namespace mcsyn::sat::detail
{

class cdcl_solver
{
public:
  enum class result
  {
    sat,
    unsat,
    unknown
  };

  /* literals are encoded as 2 * var + sign with sign = 1 for negation */
  static constexpr uint32_t lit_undef = UINT32_MAX;
  static constexpr uint32_t cref_undef = UINT32_MAX;

  static uint32_t make_lit( uint32_t var, bool sign ) { return 2u * var + ( sign ? 1u : 0u ); }
  static uint32_t lit_var( uint32_t lit ) { return lit >> 1u; }
  static bool lit_sign( uint32_t lit ) { return lit & 1u; }
  static uint32_t lit_neg( uint32_t lit ) { return lit ^ 1u; }

  uint32_t add_variable()
  {
    auto const v = static_cast<uint32_t>( assigns_.size() );
    assigns_.push_back( 0 );
    level_.push_back( 0u );
    reason_.push_back( cref_undef );
    activity_.push_back( 0.0 );
    saved_phase_.push_back( 1u );
    seen_.push_back( 0u );
    heap_index_.push_back( -1 );
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert( v );
    return v;
  }

  uint32_t num_variables() const { return static_cast<uint32_t>( assigns_.size() ); }

  /*! \brief Adds a clause of internal literals; returns false if the formula became unsatisfiable. */
  bool add_clause( std::vector<uint32_t> lits )
  {
    assert( decision_level() == 0u );
    if ( !ok_ )
    {
      return false;
    }
    std::sort( lits.begin(), lits.end() );
    uint32_t out = 0u;
    uint32_t prev = lit_undef;
    for ( auto l : lits )
    {
      assert( lit_var( l ) < num_variables() );
      if ( l == prev )
      {
        continue;
      }
      if ( prev != lit_undef && l == lit_neg( prev ) )
      {
        return true; /* tautology */
      }
      auto const v = value_lit( l );
      if ( v == 1 )
      {
        return true; /* satisfied at level 0 */
      }
      if ( v == -1 )
      {
        continue; /* falsified at level 0 */
      }
      lits[out++] = l;
      prev = l;
    }
    lits.resize( out );
    if ( lits.empty() )
    {
      ok_ = false;
      return false;
    }
    if ( lits.size() == 1u )
    {
      unchecked_enqueue( lits[0], cref_undef );
      if ( propagate() != cref_undef )
      {
        ok_ = false;
        return false;
      }
      return true;
    }
    auto const cr = alloc_clause( lits, false );
    originals_.push_back( cr );
    attach_clause( cr );
    return true;
  }

  /*! \brief Solves under assumptions with an optional conflict budget (0 = unlimited). */
  result solve( std::vector<uint32_t> const& assumptions, uint64_t conflict_budget )
  {
    if ( !ok_ )
    {
      return result::unsat;
    }
    cancel_until( 0u );
    if ( propagate() != cref_undef )
    {
      ok_ = false;
      return result::unsat;
    }
    uint64_t conflicts_used = 0u;
    uint32_t restarts = 0u;
    while ( true )
    {
      auto const res = search( assumptions, luby( restarts ) * restart_base_, conflict_budget, conflicts_used );
      switch ( res )
      {
      case search_result::sat:
        model_.resize( num_variables() );
        for ( uint32_t v = 0u; v < num_variables(); ++v )
        {
          model_[v] = assigns_[v] == 1 ? 1u : 0u;
        }
        cancel_until( 0u );
        return result::sat;
      case search_result::unsat:
        ok_ = false;
        cancel_until( 0u );
        return result::unsat;
      case search_result::unsat_under_assumptions:
        cancel_until( 0u );
        return result::unsat;
      case search_result::budget_exhausted:
        cancel_until( 0u );
        return result::unknown;
      case search_result::restart:
        ++restarts;
        break;
      }
    }
  }

  bool model_value( uint32_t var ) const { return model_[var] != 0u; }

  uint64_t num_conflicts() const { return conflicts_; }
  uint64_t num_decisions() const { return decisions_; }
  uint64_t num_propagations() const { return propagations_; }
  uint64_t num_clauses() const { return originals_.size(); }
  uint64_t num_learnts() const { return learnts_.size(); }

private:
  enum class search_result
  {
    sat,
    unsat,
    unsat_under_assumptions,
    budget_exhausted,
    restart
  };

  struct watcher
  {
    uint32_t cref;
    uint32_t blocker;
  };

  /* clause arena: [header][activity, lbd if learnt][lits...] */
  uint32_t c_size( uint32_t cr ) const { return arena_[cr] >> 2u; }
  bool c_learnt( uint32_t cr ) const { return ( arena_[cr] >> 1u ) & 1u; }
  bool c_deleted( uint32_t cr ) const { return arena_[cr] & 1u; }
  uint32_t const* c_lits( uint32_t cr ) const { return arena_.data() + cr + 1u + ( c_learnt( cr ) ? 2u : 0u ); }
  uint32_t* c_lits( uint32_t cr ) { return arena_.data() + cr + 1u + ( c_learnt( cr ) ? 2u : 0u ); }

  float c_activity( uint32_t cr ) const
  {
    float f;
    std::memcpy( &f, &arena_[cr + 1u], sizeof( float ) );
    return f;
  }

  void c_set_activity( uint32_t cr, float act ) { std::memcpy( &arena_[cr + 1u], &act, sizeof( float ) ); }

  uint32_t c_lbd( uint32_t cr ) const { return arena_[cr + 2u]; }
  void c_set_lbd( uint32_t cr, uint32_t lbd ) { arena_[cr + 2u] = lbd; }

  void c_mark_deleted( uint32_t cr )
  {
    wasted_ += 1u + ( c_learnt( cr ) ? 2u : 0u ) + c_size( cr );
    arena_[cr] |= 1u;
  }

  uint32_t alloc_clause( std::vector<uint32_t> const& lits, bool learnt )
  {
    auto const cr = static_cast<uint32_t>( arena_.size() );
    arena_.push_back( ( static_cast<uint32_t>( lits.size() ) << 2u ) | ( learnt ? 2u : 0u ) );
    if ( learnt )
    {
      arena_.push_back( 0u );
      arena_.push_back( 0u );
      c_set_activity( cr, 0.0f );
    }
    arena_.insert( arena_.end(), lits.begin(), lits.end() );
    return cr;
  }

  void attach_clause( uint32_t cr )
  {
    auto const* lits = c_lits( cr );
    watches_[lit_neg( lits[0] )].push_back( { cr, lits[1] } );
    watches_[lit_neg( lits[1] )].push_back( { cr, lits[0] } );
  }

  int8_t value_lit( uint32_t lit ) const
  {
    auto const a = assigns_[lit_var( lit )];
    return lit_sign( lit ) ? static_cast<int8_t>( -a ) : a;
  }

  uint32_t decision_level() const { return static_cast<uint32_t>( trail_lim_.size() ); }

  void new_decision_level() { trail_lim_.push_back( static_cast<uint32_t>( trail_.size() ) ); }

  void unchecked_enqueue( uint32_t lit, uint32_t from )
  {
    auto const v = lit_var( lit );
    assert( assigns_[v] == 0 );
    assigns_[v] = lit_sign( lit ) ? -1 : 1;
    level_[v] = decision_level();
    reason_[v] = from;
    saved_phase_[v] = lit_sign( lit ) ? 1u : 0u;
    trail_.push_back( lit );
  }

  void cancel_until( uint32_t target_level )
  {
    if ( decision_level() <= target_level )
    {
      return;
    }
    auto const bound = trail_lim_[target_level];
    for ( auto i = trail_.size(); i-- > bound; )
    {
      auto const v = lit_var( trail_[i] );
      assigns_[v] = 0;
      reason_[v] = cref_undef;
      if ( heap_index_[v] < 0 )
      {
        heap_insert( v );
      }
    }
    trail_.resize( bound );
    trail_lim_.resize( target_level );
    qhead_ = std::min<uint32_t>( qhead_, static_cast<uint32_t>( trail_.size() ) );
  }

  uint32_t propagate()
  {
    while ( qhead_ < trail_.size() )
    {
      auto const p = trail_[qhead_++];
      ++propagations_;
      auto& ws = watches_[p];
      size_t i = 0u, j = 0u;
      while ( i < ws.size() )
      {
        auto const w = ws[i];
        if ( value_lit( w.blocker ) == 1 )
        {
          ws[j++] = ws[i++];
          continue;
        }
        auto const cr = w.cref;
        auto* lits = c_lits( cr );
        auto const not_p = lit_neg( p );
        if ( lits[0] == not_p )
        {
          std::swap( lits[0], lits[1] );
        }
        ++i;
        auto const first = lits[0];
        if ( first != w.blocker && value_lit( first ) == 1 )
        {
          ws[j++] = { cr, first };
          continue;
        }
        auto const sz = c_size( cr );
        auto moved = false;
        for ( uint32_t k = 2u; k < sz; ++k )
        {
          if ( value_lit( lits[k] ) != -1 )
          {
            std::swap( lits[1], lits[k] );
            watches_[lit_neg( lits[1] )].push_back( { cr, first } );
            moved = true;
            break;
          }
        }
        if ( moved )
        {
          continue;
        }
        ws[j++] = { cr, first };
        if ( value_lit( first ) == -1 )
        {
          while ( i < ws.size() )
          {
            ws[j++] = ws[i++];
          }
          ws.resize( j );
          qhead_ = static_cast<uint32_t>( trail_.size() );
          return cr;
        }
        unchecked_enqueue( first, cr );
      }
      ws.resize( j );
    }
    return cref_undef;
  }

  uint32_t abstract_level( uint32_t v ) const { return 1u << ( level_[v] & 31u ); }

  /*! \brief Deep redundancy check: the literal is implied by seen literals through reasons. */
  bool lit_redundant( uint32_t lit, uint32_t abstract_levels )
  {
    analyze_stack_.clear();
    analyze_stack_.push_back( lit );
    auto const checkpoint = analyze_toclear_.size();
    while ( !analyze_stack_.empty() )
    {
      auto const r = reason_[lit_var( analyze_stack_.back() )];
      analyze_stack_.pop_back();
      assert( r != cref_undef );
      auto const* lits = c_lits( r );
      for ( uint32_t k = 1u; k < c_size( r ); ++k )
      {
        auto const q = lits[k];
        auto const v = lit_var( q );
        if ( seen_[v] || level_[v] == 0u )
        {
          continue;
        }
        if ( reason_[v] != cref_undef && ( abstract_level( v ) & abstract_levels ) != 0u )
        {
          seen_[v] = 1u;
          analyze_stack_.push_back( q );
          analyze_toclear_.push_back( v );
        }
        else
        {
          for ( auto it = checkpoint; it < analyze_toclear_.size(); ++it )
          {
            seen_[analyze_toclear_[it]] = 0u;
          }
          analyze_toclear_.resize( checkpoint );
          return false;
        }
      }
    }
    return true;
  }

  uint32_t clause_lbd( std::vector<uint32_t> const& lits )
  {
    ++lbd_stamp_;
    uint32_t lbd = 0u;
    for ( auto const l : lits )
    {
      auto const lvl = level_[lit_var( l )];
      if ( lvl > 0u && lbd_seen_[lvl] != lbd_stamp_ )
      {
        lbd_seen_[lvl] = lbd_stamp_;
        ++lbd;
      }
    }
    return lbd;
  }

  void analyze( uint32_t confl, std::vector<uint32_t>& out_learnt, uint32_t& out_level, uint32_t& out_lbd )
  {
    out_learnt.clear();
    out_learnt.push_back( lit_undef );
    uint32_t path_count = 0u;
    uint32_t p = lit_undef;
    auto idx = trail_.size();
    analyze_toclear_.clear();
    do
    {
      assert( confl != cref_undef );
      if ( c_learnt( confl ) )
      {
        bump_clause( confl );
      }
      auto const* lits = c_lits( confl );
      for ( uint32_t k = p == lit_undef ? 0u : 1u; k < c_size( confl ); ++k )
      {
        auto const q = lits[k];
        auto const v = lit_var( q );
        if ( !seen_[v] && level_[v] > 0u )
        {
          seen_[v] = 1u;
          analyze_toclear_.push_back( v );
          bump_var( v );
          if ( level_[v] >= decision_level() )
          {
            ++path_count;
          }
          else
          {
            out_learnt.push_back( q );
          }
        }
      }
      while ( !seen_[lit_var( trail_[idx - 1u] )] )
      {
        --idx;
      }
      p = trail_[--idx];
      confl = reason_[lit_var( p )];
      seen_[lit_var( p )] = 0u;
      --path_count;
    } while ( path_count > 0u );
    out_learnt[0] = lit_neg( p );

    /* deep minimization: drop literals whose reasons stay within the clause */
    uint32_t abstract_levels = 0u;
    for ( size_t k = 1u; k < out_learnt.size(); ++k )
    {
      abstract_levels |= abstract_level( lit_var( out_learnt[k] ) );
    }
    size_t keep = 1u;
    for ( size_t k = 1u; k < out_learnt.size(); ++k )
    {
      auto const v = lit_var( out_learnt[k] );
      if ( reason_[v] == cref_undef || !lit_redundant( out_learnt[k], abstract_levels ) )
      {
        out_learnt[keep++] = out_learnt[k];
      }
    }
    out_learnt.resize( keep );

    if ( out_learnt.size() == 1u )
    {
      out_level = 0u;
    }
    else
    {
      size_t max_pos = 1u;
      for ( size_t k = 2u; k < out_learnt.size(); ++k )
      {
        if ( level_[lit_var( out_learnt[k] )] > level_[lit_var( out_learnt[max_pos] )] )
        {
          max_pos = k;
        }
      }
      std::swap( out_learnt[1], out_learnt[max_pos] );
      out_level = level_[lit_var( out_learnt[1] )];
    }
    out_lbd = clause_lbd( out_learnt );
    for ( auto v : analyze_toclear_ )
    {
      seen_[v] = 0u;
    }
  }

  bool clause_locked( uint32_t cr ) const
  {
    auto const first = c_lits( cr )[0];
    return value_lit( first ) == 1 && reason_[lit_var( first )] == cr;
  }

  void reduce_learnts()
  {
    /* glue clauses (small LBD) are kept unconditionally */
    std::vector<uint32_t> candidates;
    candidates.reserve( learnts_.size() );
    for ( auto cr : learnts_ )
    {
      if ( !c_deleted( cr ) && c_size( cr ) > 2u && c_lbd( cr ) > 3u && !clause_locked( cr ) )
      {
        candidates.push_back( cr );
      }
    }
    std::sort( candidates.begin(), candidates.end(), [&]( uint32_t a, uint32_t b ) {
      if ( c_lbd( a ) != c_lbd( b ) )
      {
        return c_lbd( a ) > c_lbd( b );
      }
      return c_activity( a ) < c_activity( b ) || ( c_activity( a ) == c_activity( b ) && a < b );
    } );
    for ( size_t k = 0u; k < candidates.size() / 2u; ++k )
    {
      c_mark_deleted( candidates[k] );
    }
    learnts_.erase( std::remove_if( learnts_.begin(), learnts_.end(),
                                    [&]( uint32_t cr ) { return c_deleted( cr ); } ),
                    learnts_.end() );
    if ( wasted_ > arena_.size() / 2u )
    {
      compact_arena();
    }
    rebuild_watches();
  }

  void compact_arena()
  {
    std::vector<uint32_t> fresh;
    fresh.reserve( arena_.size() - wasted_ );
    std::unordered_map<uint32_t, uint32_t> relocation;
    auto const move_clause = [&]( uint32_t cr ) {
      auto const words = 1u + ( c_learnt( cr ) ? 2u : 0u ) + c_size( cr );
      auto const to = static_cast<uint32_t>( fresh.size() );
      fresh.insert( fresh.end(), arena_.begin() + cr, arena_.begin() + cr + words );
      relocation.emplace( cr, to );
    };
    for ( auto cr : originals_ )
    {
      if ( !c_deleted( cr ) )
      {
        move_clause( cr );
      }
    }
    for ( auto cr : learnts_ )
    {
      move_clause( cr );
    }
    auto const remap = [&]( uint32_t cr ) { return cr == cref_undef ? cref_undef : relocation.at( cr ); };
    originals_.erase( std::remove_if( originals_.begin(), originals_.end(),
                                      [&]( uint32_t cr ) { return c_deleted( cr ); } ),
                      originals_.end() );
    for ( auto& cr : originals_ )
    {
      cr = remap( cr );
    }
    for ( auto& cr : learnts_ )
    {
      cr = remap( cr );
    }
    for ( auto& r : reason_ )
    {
      if ( r != cref_undef )
      {
        r = relocation.at( r ); /* reasons are locked, never deleted */
      }
    }
    arena_ = std::move( fresh );
    wasted_ = 0u;
  }

  void rebuild_watches()
  {
    for ( auto& ws : watches_ )
    {
      ws.clear();
    }
    for ( auto cr : originals_ )
    {
      if ( !c_deleted( cr ) )
      {
        attach_clause( cr );
      }
    }
    for ( auto cr : learnts_ )
    {
      attach_clause( cr );
    }
  }

  search_result search( std::vector<uint32_t> const& assumptions, uint64_t restart_budget,
                        uint64_t conflict_budget, uint64_t& conflicts_used )
  {
    uint64_t local_conflicts = 0u;
    std::vector<uint32_t> learnt;
    while ( true )
    {
      auto const confl = propagate();
      if ( confl != cref_undef )
      {
        ++conflicts_;
        ++local_conflicts;
        ++conflicts_used;
        if ( decision_level() == 0u )
        {
          return search_result::unsat;
        }
        uint32_t bt_level, lbd;
        analyze( confl, learnt, bt_level, lbd );
        cancel_until( bt_level );
        if ( learnt.size() == 1u )
        {
          unchecked_enqueue( learnt[0], cref_undef );
        }
        else
        {
          auto const cr = alloc_clause( learnt, true );
          c_set_lbd( cr, lbd );
          learnts_.push_back( cr );
          attach_clause( cr );
          bump_clause( cr );
          unchecked_enqueue( learnt[0], cr );
        }
        decay_activities();
        if ( conflict_budget != 0u && conflicts_used >= conflict_budget )
        {
          return search_result::budget_exhausted;
        }
        if ( learnts_.size() >= reduce_base_ + reduce_increment_ * num_reductions_ )
        {
          ++num_reductions_;
          reduce_learnts();
        }
        if ( local_conflicts >= restart_budget )
        {
          return search_result::restart;
        }
      }
      else
      {
        if ( decision_level() < assumptions.size() )
        {
          auto const p = assumptions[decision_level()];
          if ( value_lit( p ) == 1 )
          {
            new_decision_level();
            continue;
          }
          if ( value_lit( p ) == -1 )
          {
            return search_result::unsat_under_assumptions;
          }
          new_decision_level();
          unchecked_enqueue( p, cref_undef );
          continue;
        }
        auto const v = pick_branch_variable();
        if ( v == lit_undef )
        {
          return search_result::sat;
        }
        ++decisions_;
        new_decision_level();
        unchecked_enqueue( make_lit( v, saved_phase_[v] != 0u ), cref_undef );
      }
    }
  }

  uint32_t pick_branch_variable()
  {
    while ( !heap_.empty() )
    {
      auto const v = heap_pop();
      if ( assigns_[v] == 0 )
      {
        return v;
      }
    }
    return lit_undef;
  }

  /* activities */
  void bump_var( uint32_t v )
  {
    activity_[v] += var_inc_;
    if ( activity_[v] > 1e100 )
    {
      for ( auto& a : activity_ )
      {
        a *= 1e-100;
      }
      var_inc_ *= 1e-100;
    }
    if ( heap_index_[v] >= 0 )
    {
      heap_up( static_cast<uint32_t>( heap_index_[v] ) );
    }
  }

  void bump_clause( uint32_t cr )
  {
    auto act = c_activity( cr ) + static_cast<float>( cla_inc_ );
    if ( act > 1e20f )
    {
      for ( auto lc : learnts_ )
      {
        c_set_activity( lc, c_activity( lc ) * 1e-20f );
      }
      cla_inc_ *= 1e-20;
      act = c_activity( cr ) + static_cast<float>( cla_inc_ );
    }
    c_set_activity( cr, act );
  }

  void decay_activities()
  {
    var_inc_ /= var_decay_;
    cla_inc_ /= cla_decay_;
  }

  /* indexed max-heap ordered by (activity, smaller index first) */
  bool heap_before( uint32_t a, uint32_t b ) const
  {
    return activity_[a] > activity_[b] || ( activity_[a] == activity_[b] && a < b );
  }

  void heap_insert( uint32_t v )
  {
    heap_index_[v] = static_cast<int32_t>( heap_.size() );
    heap_.push_back( v );
    heap_up( static_cast<uint32_t>( heap_.size() ) - 1u );
  }

  void heap_up( uint32_t pos )
  {
    auto const v = heap_[pos];
    while ( pos > 0u )
    {
      auto const parent = ( pos - 1u ) >> 1u;
      if ( !heap_before( v, heap_[parent] ) )
      {
        break;
      }
      heap_[pos] = heap_[parent];
      heap_index_[heap_[pos]] = static_cast<int32_t>( pos );
      pos = parent;
    }
    heap_[pos] = v;
    heap_index_[v] = static_cast<int32_t>( pos );
  }

  void heap_down( uint32_t pos )
  {
    auto const v = heap_[pos];
    auto const size = static_cast<uint32_t>( heap_.size() );
    while ( true )
    {
      auto child = 2u * pos + 1u;
      if ( child >= size )
      {
        break;
      }
      if ( child + 1u < size && heap_before( heap_[child + 1u], heap_[child] ) )
      {
        ++child;
      }
      if ( !heap_before( heap_[child], v ) )
      {
        break;
      }
      heap_[pos] = heap_[child];
      heap_index_[heap_[pos]] = static_cast<int32_t>( pos );
      pos = child;
    }
    heap_[pos] = v;
    heap_index_[v] = static_cast<int32_t>( pos );
  }

  uint32_t heap_pop()
  {
    auto const v = heap_[0];
    heap_index_[v] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if ( !heap_.empty() )
    {
      heap_index_[heap_[0]] = 0;
      heap_down( 0u );
    }
    return v;
  }

  static uint64_t luby( uint32_t i )
  {
    /* index into the 1,1,2,1,1,2,4,... sequence (1-based position i+1) */
    uint32_t size = 1u;
    uint32_t seq = 0u;
    while ( size < i + 1u )
    {
      ++seq;
      size = 2u * size + 1u;
    }
    auto x = i;
    while ( size - 1u != x )
    {
      size = ( size - 1u ) >> 1u;
      --seq;
      x = x % size;
    }
    return uint64_t( 1 ) << seq;
  }

  /* state */
  std::vector<uint32_t> arena_;
  size_t wasted_ = 0u;
  std::vector<uint32_t> originals_;
  std::vector<uint32_t> learnts_;
  std::vector<std::vector<watcher>> watches_;
  std::vector<int8_t> assigns_;
  std::vector<uint32_t> level_;
  std::vector<uint32_t> reason_;
  std::vector<uint8_t> saved_phase_;
  std::vector<uint8_t> seen_;
  std::vector<uint32_t> trail_;
  std::vector<uint32_t> trail_lim_;
  uint32_t qhead_ = 0u;
  bool ok_ = true;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  double var_decay_ = 0.95;
  double cla_inc_ = 1.0;
  double cla_decay_ = 0.999;
  std::vector<uint32_t> heap_;
  std::vector<int32_t> heap_index_;

  std::vector<uint8_t> model_;

  uint64_t conflicts_ = 0u;
  uint64_t decisions_ = 0u;
  uint64_t propagations_ = 0u;
  uint64_t restart_base_ = 128u;
  size_t reduce_base_ = 6000u;
  size_t reduce_increment_ = 1500u;
  size_t num_reductions_ = 0u;
};

} // namespace mcsyn::sat::detail
