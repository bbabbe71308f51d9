/* pblin: pseudo-Boolean linearization toolkit
 * Copyright (C) 2026 the pblin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*!
  \file partial_sums.hpp
  \brief Partial sum sets and minimum covering dimension

  The linearization complexity over all Boolean functions equals the
  smallest k such that some w in Q^k has a partial sum set covering the
  range of the nonlinear part.  The cover search enumerates, for ascending
  k, assignments of each target to a nonempty subset of {1..k} and decides
  each branch by exact linear feasibility.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linsolve.hpp"
#include "multilinear.hpp"
#include "point.hpp"
#include "rational.hpp"

namespace pblin
{

struct partial_sum_set
{
  std::vector<rational> generator;
  std::set<rational> sums;
};

/*! \brief All 2^k subset sums of `w`, deduplicated.  pss of the empty vector is {0}. */
inline partial_sum_set make_partial_sum_set( const std::vector<rational>& w, const caps& limits = {} )
{
  require_cap( static_cast<int>( w.size() ) <= limits.pss_length,
               "partial sums: generator length exceeds cap" );
  partial_sum_set result;
  result.generator = w;
  const uint64_t subsets = uint64_t( 1 ) << w.size();
  for ( uint64_t mask = 0; mask < subsets; ++mask )
  {
    rational sum( 0 );
    for ( std::size_t i = 0; i < w.size(); ++i )
    {
      if ( mask & ( uint64_t( 1 ) << i ) )
      {
        sum += w[i];
      }
    }
    result.sums.insert( std::move( sum ) );
  }
  return result;
}

struct cover_result
{
  int k = 0;
  std::vector<rational> w;
  std::map<rational, std::vector<int>> assignment; /* target -> subset of {1..k} */
};

namespace detail
{

struct cover_search
{
  int k;
  std::vector<rational> targets; /* magnitude-descending */
  incremental_eliminator elim;
  std::vector<uint64_t> chosen;

  cover_search( int k_, std::vector<rational> targets_ )
      : k( k_ ), targets( std::move( targets_ ) ), elim( k_ )
  {
    chosen.reserve( targets.size() );
  }

  bool assign( std::size_t depth )
  {
    if ( depth == targets.size() )
    {
      return true;
    }
    const uint64_t limit = uint64_t( 1 ) << k;
    for ( uint64_t mask = 1; mask < limit; ++mask )
    {
      /* coordinate-permutation symmetry: the first (largest-magnitude)
         target may be assumed to use coordinate 1 */
      if ( depth == 0 && !( mask & 1u ) )
      {
        continue;
      }
      linear_row row;
      row.coeffs.assign( k, rational( 0 ) );
      for ( int i = 0; i < k; ++i )
      {
        if ( mask & ( uint64_t( 1 ) << i ) )
        {
          row.coeffs[i] = rational( 1 );
        }
      }
      row.rhs = targets[depth];
      if ( elim.push( std::move( row ) ) )
      {
        chosen.push_back( mask );
        if ( assign( depth + 1 ) )
        {
          return true;
        }
        chosen.pop_back();
        elim.pop();
      }
    }
    return false;
  }
};

inline std::vector<int> mask_to_indices( uint64_t mask )
{
  std::vector<int> indices;
  for ( int i = 1; mask != 0; ++i, mask >>= 1 )
  {
    if ( mask & 1u )
    {
      indices.push_back( i );
    }
  }
  return indices;
}

} /* namespace detail */

/*! \brief Minimum dimension k with pss(w) covering `targets`, with witness.

  Searched ascending from the information lower bound
  ceil(log2 |targets union {0}|).  Throws cap_error when no cover of
  dimension at most k_cap exists; the message carries the proven bound.
*/
inline cover_result min_pss_cover( const std::set<rational>& targets, int k_cap,
                                   const caps& limits = {} )
{
  require_cap( static_cast<int>( targets.size() ) <= limits.cover_targets,
               "cover: target set larger than cap" );
  require_cap( k_cap <= limits.cover_k, "cover: k_cap exceeds cap" );

  std::vector<rational> work;
  for ( const auto& y : targets )
  {
    if ( !y.is_zero() )
    {
      work.push_back( y );
    }
  }
  std::sort( work.begin(), work.end(), []( const rational& a, const rational& b ) {
    const auto aa = a.abs(), bb = b.abs();
    if ( aa != bb )
    {
      return bb < aa;
    }
    return b < a;
  } );

  const std::size_t distinct = work.size() + 1; /* targets union {0} */
  int k_lower = 0;
  while ( ( std::size_t( 1 ) << k_lower ) < distinct )
  {
    ++k_lower;
  }

  for ( int k = k_lower; k <= k_cap; ++k )
  {
    detail::cover_search search( k, work );
    if ( !search.assign( 0 ) )
    {
      continue;
    }
    cover_result result;
    result.k = k;
    result.w = search.elim.solve();
    for ( std::size_t i = 0; i < work.size(); ++i )
    {
      result.assignment[work[i]] = detail::mask_to_indices( search.chosen[i] );
    }
    if ( targets.count( rational( 0 ) ) )
    {
      result.assignment[rational( 0 )] = {};
    }
    /* direct check: the witness really covers */
    const auto pss = make_partial_sum_set( result.w, limits );
    for ( const auto& y : targets )
    {
      require_input( pss.sums.count( y ) == 1, "cover: internal witness check failed" );
    }
    return result;
  }
  throw cap_error( "cover: no generator of dimension <= " + std::to_string( k_cap ) +
                   " covers the targets; minimum dimension exceeds " + std::to_string( k_cap ) );
}

/*! \brief Range of the nonlinear part of f, by full enumeration. */
inline std::set<rational> nonlinear_range( const std::function<rational( const point_assignment& )>& f,
                                           int arity, const caps& limits = {} )
{
  require_cap( arity <= limits.enumeration, "range: arity exceeds enumeration cap" );
  const rational f0 = f( point_assignment::zero( arity ) );
  std::vector<rational> slope( arity );
  for ( int i = 1; i <= arity; ++i )
  {
    slope[i - 1] = f( point_assignment::unit( arity, i ) ) - f0;
  }
  std::set<rational> range;
  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << arity ); ++v )
  {
    const auto x = point_assignment::from_index( arity, v );
    rational tilde = f( x ) - f0;
    for ( int i = 1; i <= arity; ++i )
    {
      if ( x.bit( i ) )
      {
        tilde -= slope[i - 1];
      }
    }
    range.insert( std::move( tilde ) );
  }
  return range;
}

/*! \brief Covering characterization of the family-B complexity: the minimum
  dimension of a partial-sum generator covering the range of the nonlinear
  part.

  Every cover yields a certificate of that size, so this is an upper bound on
  the complexity over all Boolean functions, and the common case is equality.
  It is not always tight, because an optimal certificate may use a different
  affine part than the one pinned at the origin and unit vectors;
  lc_boolean_exact in lc_search.hpp searches over that freedom too.
*/
inline cover_result lc_boolean( const std::function<rational( const point_assignment& )>& f,
                                int arity, const caps& limits = {} )
{
  return min_pss_cover( nonlinear_range( f, arity, limits ), limits.cover_k, limits );
}

} /* namespace pblin */
