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
  \file lc_search.hpp
  \brief Exact linearization-complexity searches

  The family-C search runs iterative deepening on the support size: for each
  size s (ascending) it enumerates s-subsets of the candidate products in
  canonical order and decides solvability of the interpolation system
  restricted to that support by exact linear algebra.  Since the affine
  unknowns are unconstrained, solvability is equivalent to membership of f's
  degree >= 2 coefficient vector in the span of the candidates' degree >= 2
  coefficient vectors, which is what is actually tested; the full
  coefficients (a, beta, b) are recovered afterwards and the certificate is
  re-verified by enumeration.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "linsolve.hpp"
#include "multilinear.hpp"
#include "partial_sums.hpp"
#include "rational.hpp"
#include "signed_product.hpp"

namespace pblin
{

/*! \brief 2^n - n - 1: the universal monomial-family upper bound. */
inline long long trivial_upper_bound( int n )
{
  require_input( n >= 1 && n <= 62, "trivial upper bound: n out of range" );
  return ( 1LL << n ) - n - 1;
}

struct lc_search_budget
{
  int max_degree = 5;
  int max_support = 16;
  double time_limit_s = 60.0;
};

struct lc_search_result
{
  linearization_certificate certificate;
  bool exact = false; /* false: budget exhausted, certificate is an upper bound */
};

namespace detail
{

/* degree >= 2 coefficient vector of a polynomial in a fixed coordinate space */
inline std::vector<rational> nonlinear_coordinates( const multilinear_poly& p,
                                                    const std::map<term_key, int, term_key_less>& coords )
{
  std::vector<rational> v( coords.size(), rational( 0 ) );
  for ( const auto& [key, coeff] : p.terms() )
  {
    if ( key.degree() >= 2 )
    {
      v[coords.at( key )] = coeff;
    }
  }
  return v;
}

struct support_search
{
  const std::vector<std::vector<rational>>& residuals;
  const std::vector<rational>& target;
  span_basis basis;
  std::vector<int> chosen;
  std::chrono::steady_clock::time_point deadline;
  bool timed_out = false;
  uint64_t ticks = 0;

  support_search( const std::vector<std::vector<rational>>& residuals_,
                  const std::vector<rational>& target_, int cols, double time_limit_s )
      : residuals( residuals_ ), target( target_ ), basis( cols ),
        deadline( std::chrono::steady_clock::now() +
                  std::chrono::microseconds( static_cast<long long>( time_limit_s * 1e6 ) ) )
  {
  }

  bool expired()
  {
    if ( ( ++ticks & 0x3ff ) == 0 && std::chrono::steady_clock::now() > deadline )
    {
      timed_out = true;
    }
    return timed_out;
  }

  bool descend( std::size_t first, int remaining )
  {
    if ( remaining == 0 )
    {
      return basis.contains( target );
    }
    for ( std::size_t i = first; i + remaining <= residuals.size(); ++i )
    {
      if ( expired() )
      {
        return false;
      }
      if ( !basis.push( residuals[i] ) )
      {
        continue; /* dependent on the chosen prefix; cannot be part of a minimal support */
      }
      chosen.push_back( static_cast<int>( i ) );
      if ( descend( i + 1, remaining - 1 ) )
      {
        return true;
      }
      chosen.pop_back();
      basis.pop();
    }
    return false;
  }
};

} /* namespace detail */

/*! \brief All candidate products with disjoint (I, J), 2 <= |I|+|J| <= max_degree,
  in canonical order (degree, I, J). */
inline std::vector<signed_product> signed_product_candidates( int arity, int max_degree )
{
  std::vector<signed_product> candidates;
  const int n = arity;
  const int top = std::min( max_degree, n );
  /* enumerate supports U, then all I/J splits of U */
  for ( uint64_t u = 0; u < ( uint64_t( 1 ) << n ); ++u )
  {
    const int deg = std::popcount( u );
    if ( deg < 2 || deg > top )
    {
      continue;
    }
    std::vector<int> support;
    for ( int i = 1; i <= n; ++i )
    {
      if ( u & ( uint64_t( 1 ) << ( i - 1 ) ) )
      {
        support.push_back( i );
      }
    }
    for ( uint64_t split = 0; split < ( uint64_t( 1 ) << deg ); ++split )
    {
      std::vector<int> I, J;
      for ( int b = 0; b < deg; ++b )
      {
        ( split & ( uint64_t( 1 ) << b ) ? J : I ).push_back( support[b] );
      }
      candidates.emplace_back( std::move( I ), std::move( J ) );
    }
  }
  std::sort( candidates.begin(), candidates.end() );
  return candidates;
}

/*! \brief Minimum-size linearization over products of complemented variables.

  Returns an exact minimum when found within the budget; otherwise the
  monomial decomposition as a flagged upper bound.
*/
inline lc_search_result lc_signed_products_exact( const multilinear_poly& f,
                                                  const lc_search_budget& budget = {},
                                                  const caps& limits = {} )
{
  const int n = f.arity();
  require_cap( n <= limits.lc_arity, "lc search: arity exceeds cap" );
  require_input( budget.max_degree >= 2 && budget.max_support >= 1 && budget.time_limit_s > 0,
                 "lc search: budget entries must be positive" );

  /* coordinate space: every index set of size >= 2 */
  std::map<term_key, int, term_key_less> coords;
  for ( uint64_t m = 0; m < ( uint64_t( 1 ) << n ); ++m )
  {
    if ( std::popcount( m ) >= 2 )
    {
      const int next = static_cast<int>( coords.size() );
      coords.emplace( term_key::from_mask( m ), next );
    }
  }
  const auto target = detail::nonlinear_coordinates( f, coords );

  const bool affine = std::all_of( target.begin(), target.end(),
                                   []( const rational& c ) { return c.is_zero(); } );
  if ( affine )
  {
    lc_search_result result;
    result.certificate = monomial_certificate( f );
    result.exact = true;
    return result;
  }

  const auto all_candidates = signed_product_candidates( n, budget.max_degree );

  /* dedupe candidates that agree modulo affine functions, keeping the
     canonically first representative */
  std::vector<signed_product> candidates;
  std::vector<std::vector<rational>> residuals;
  std::map<std::vector<std::pair<int, rational>>, bool> seen;
  for ( const auto& g : all_candidates )
  {
    auto vec = detail::nonlinear_coordinates( g.to_poly( n ), coords );
    std::vector<std::pair<int, rational>> fingerprint;
    for ( std::size_t c = 0; c < vec.size(); ++c )
    {
      if ( !vec[c].is_zero() )
      {
        fingerprint.emplace_back( static_cast<int>( c ), vec[c] );
      }
    }
    if ( seen.emplace( std::move( fingerprint ), true ).second )
    {
      candidates.push_back( g );
      residuals.push_back( std::move( vec ) );
    }
  }

  const int max_support = std::min<int>( budget.max_support, static_cast<int>( candidates.size() ) );
  detail::support_search search( residuals, target, static_cast<int>( coords.size() ),
                                 budget.time_limit_s );
  for ( int s = 1; s <= max_support; ++s )
  {
    if ( search.descend( 0, s ) )
    {
      const auto weights = search.basis.coordinates( target );
      require_input( weights.has_value(), "lc search: internal coordinate recovery failed" );

      lc_search_result result;
      result.exact = true;
      result.certificate.arity = n;
      result.certificate.linear.assign( n, rational( 0 ) );

      multilinear_poly affine_rest = f;
      for ( std::size_t i = 0; i < search.chosen.size(); ++i )
      {
        const auto& g = candidates[search.chosen[i]];
        const rational& b = ( *weights )[i];
        require_input( !b.is_zero(), "lc search: zero weight on a minimal support" );
        certificate_term term;
        term.family = g.is_monomial() ? fn_family::monomial : fn_family::product;
        term.product = g;
        term.weight = b;
        result.certificate.terms.push_back( std::move( term ) );
        const auto g_poly = g.to_poly( n );
        for ( const auto& [key, coeff] : g_poly.terms() )
        {
          affine_rest.add_term( key, -( b * coeff ) );
        }
      }
      require_input( affine_rest.is_affine(), "lc search: residual is not affine" );
      for ( const auto& [key, coeff] : affine_rest.terms() )
      {
        if ( key.degree() == 0 )
        {
          result.certificate.offset = coeff;
        }
        else
        {
          result.certificate.linear[key.indices[0] - 1] = coeff;
        }
      }
      require_input(
          verify_certificate( [&]( const point_assignment& x ) { return f.evaluate( x ); }, n,
                              result.certificate, limits ),
          "lc search: certificate failed verification" );
      return result;
    }
    if ( search.timed_out )
    {
      break;
    }
  }

  /* budget exhausted: report the monomial decomposition as an upper bound */
  lc_search_result fallback;
  fallback.certificate = monomial_certificate( f );
  fallback.exact = false;
  return fallback;
}

/*! \brief Family-B certificate from a cover of the nonlinear range:
  g_i(x) = 1 iff coordinate i appears in the subset assigned to tilde-f(x). */
inline linearization_certificate
boolean_certificate( const std::function<rational( const point_assignment& )>& f, int arity,
                     const cover_result& cover, const caps& limits = {} )
{
  require_cap( arity <= limits.enumeration, "boolean certificate: arity exceeds enumeration cap" );
  linearization_certificate cert;
  cert.arity = arity;
  cert.offset = f( point_assignment::zero( arity ) );
  cert.linear.resize( arity );
  for ( int i = 1; i <= arity; ++i )
  {
    cert.linear[i - 1] = f( point_assignment::unit( arity, i ) ) - cert.offset;
  }

  std::vector<std::vector<uint8_t>> tables( cover.k,
                                            std::vector<uint8_t>( std::size_t( 1 ) << arity, 0 ) );
  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << arity ); ++v )
  {
    const auto x = point_assignment::from_index( arity, v );
    rational tilde = f( x ) - cert.offset;
    for ( int i = 1; i <= arity; ++i )
    {
      if ( x.bit( i ) )
      {
        tilde -= cert.linear[i - 1];
      }
    }
    const auto it = cover.assignment.find( tilde );
    require_input( it != cover.assignment.end(), "boolean certificate: cover misses a range value" );
    for ( int i : it->second )
    {
      tables[i - 1][v] = 1;
    }
  }
  for ( int i = 0; i < cover.k; ++i )
  {
    require_input( !cover.w[i].is_zero(), "boolean certificate: zero weight in cover witness" );
    certificate_term term;
    term.family = fn_family::boolean;
    term.table = std::move( tables[i] );
    term.weight = cover.w[i];
    cert.terms.push_back( std::move( term ) );
  }
  return cert;
}

/* --- exact family-B complexity ---------------------------------------------
 *
 * A cover of the nonlinear range yields a certificate, so the cover dimension
 * is an upper bound on the family-B complexity.  It is not always tight: the
 * affine part of an optimal certificate need not be the one pinned at the
 * origin and the unit vectors (f = x1x2+x1x3+x2x3-x1x2x3 has a size-1
 * certificate with affine part x1+x2+x3-1, while its nonlinear range {0,1,2}
 * admits no one-dimensional cover).  The exact search therefore frees the
 * affine part as well: it labels every cube point with a subset of {1..k}
 * and decides, by exact incremental elimination in the unknowns
 * (a, beta, w), whether f(x) = a.x + beta + sum_{i in label(x)} w_i is
 * solvable.  Coordinates are required to be introduced in increasing order,
 * which removes the permutation symmetry of w.
 */

struct lc_boolean_result
{
  int k = 0;
  linearization_certificate certificate;
  bool exact = true;
};

namespace detail
{

struct labeling_search
{
  int n, k;
  const std::vector<rational>& values;
  incremental_eliminator elim;
  std::vector<uint64_t> labels;
  uint64_t nodes = 0;
  uint64_t node_budget;
  bool exhausted = false;

  labeling_search( int n_, int k_, const std::vector<rational>& values_, uint64_t budget )
      : n( n_ ), k( k_ ), values( values_ ), elim( n_ + 1 + k_ ), node_budget( budget )
  {
    labels.reserve( std::size_t( 1 ) << n );
  }

  bool descend( uint64_t point, int max_used )
  {
    if ( point == ( uint64_t( 1 ) << n ) )
    {
      return true;
    }
    for ( uint64_t label = 0; label < ( uint64_t( 1 ) << k ); ++label )
    {
      /* new coordinates must be the next unused ones, in order */
      const uint64_t fresh = label >> max_used;
      if ( ( fresh & ( fresh + 1 ) ) != 0 )
      {
        continue;
      }
      if ( ++nodes > node_budget )
      {
        exhausted = true;
        return false;
      }
      linear_row row;
      row.coeffs.assign( n + 1 + k, rational( 0 ) );
      for ( int i = 0; i < n; ++i )
      {
        if ( point & ( uint64_t( 1 ) << i ) )
        {
          row.coeffs[i] = rational( 1 );
        }
      }
      row.coeffs[n] = rational( 1 ); /* beta */
      for ( int i = 0; i < k; ++i )
      {
        if ( label & ( uint64_t( 1 ) << i ) )
        {
          row.coeffs[n + 1 + i] = rational( 1 );
        }
      }
      row.rhs = values[point];
      if ( elim.push( std::move( row ) ) )
      {
        labels.push_back( label );
        if ( descend( point + 1, max_used + std::popcount( fresh ) ) )
        {
          return true;
        }
        labels.pop_back();
        elim.pop();
        if ( exhausted )
        {
          return false;
        }
      }
    }
    return false;
  }
};

} /* namespace detail */

/*! \brief Exact linearization complexity over all Boolean functions, with a
  verified certificate.

  Searches k = 1, 2, ... with the labeling enumeration above; the cover of
  the nonlinear range (or, failing its caps, the monomial decomposition)
  bounds the search from above, so the loop always terminates.  If the node
  budget runs out first, the best known upper-bound certificate is returned
  with `exact` unset.
*/
inline lc_boolean_result lc_boolean_exact( const std::function<rational( const point_assignment& )>& f,
                                           int arity, const caps& limits = {},
                                           uint64_t node_budget = 20'000'000 )
{
  require_cap( arity <= limits.lc_arity, "lc_B: arity exceeds cap" );

  const uint64_t size = uint64_t( 1 ) << arity;
  std::vector<rational> values( size );
  for ( uint64_t v = 0; v < size; ++v )
  {
    values[v] = f( point_assignment::from_index( arity, v ) );
  }
  const auto poly = interpolate( arity, f, limits );

  lc_boolean_result result;
  if ( poly.is_affine() )
  {
    result.k = 0;
    result.certificate = monomial_certificate( poly );
    return result;
  }

  /* upper bound and its certificate */
  int upper = poly.monomial_count_deg2plus();
  linearization_certificate upper_cert = monomial_certificate( poly );
  try
  {
    const auto cover = lc_boolean( f, arity, limits );
    if ( cover.k < upper )
    {
      upper = cover.k;
      upper_cert = boolean_certificate( f, arity, cover, limits );
    }
  }
  catch ( const cap_error& )
  {
    /* range too large for the cover search; the monomial bound stands */
  }

  for ( int k = 1; k < upper; ++k )
  {
    detail::labeling_search search( arity, k, values, node_budget );
    if ( search.descend( 0, 0 ) )
    {
      const auto solution = search.elim.solve();
      result.k = k;
      result.certificate.arity = arity;
      result.certificate.linear.assign( solution.begin(), solution.begin() + arity );
      result.certificate.offset = solution[arity];
      for ( int i = 0; i < k; ++i )
      {
        const rational& weight = solution[arity + 1 + i];
        if ( weight.is_zero() )
        {
          continue; /* unused coordinate; certificate stays valid and smaller */
        }
        certificate_term term;
        term.family = fn_family::boolean;
        term.table.resize( size );
        for ( uint64_t v = 0; v < size; ++v )
        {
          term.table[v] = ( search.labels[v] >> i ) & 1;
        }
        term.weight = weight;
        result.certificate.terms.push_back( std::move( term ) );
      }
      require_input( verify_certificate( f, arity, result.certificate, limits ),
                     "lc_B: certificate failed verification" );
      return result;
    }
    if ( search.exhausted )
    {
      result.k = upper;
      result.certificate = std::move( upper_cert );
      result.exact = false;
      return result;
    }
  }

  result.k = upper;
  result.certificate = std::move( upper_cert );
  require_input( verify_certificate( f, arity, result.certificate, limits ),
                 "lc_B: certificate failed verification" );
  return result;
}

} /* namespace pblin */
