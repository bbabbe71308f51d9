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
  \file labs.hpp
  \brief Low-autocorrelation binary sequences

  Minimize sum_d (sum_i s_i s_{i+d})^2 over s in {-1,+1}^N.  Provides the
  exact 0/1 polynomial expansion (substituting s = 2x - 1), three IP model
  builders of decreasing size, an exhaustive optimum search with incremental
  Gray-code updates, and a CSV comparison harness.

  The value-indicator model exists in two variants.  The displayed model uses
  one pair variable per i < j and the parity-constrained value sets L_d; the
  compat variant (one pair variable per ordered pair, full integer ranges)
  reproduces the published size table exactly: 2N^2 - 1 variables and
  2N^2 - 2 constraints.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "boolean_fn.hpp"
#include "errors.hpp"
#include "formulations.hpp"
#include "milp.hpp"
#include "multilinear.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "solver_bridge.hpp"

namespace pblin
{

struct spin_sequence
{
  std::vector<int8_t> spins; /* entries in {-1,+1} */

  spin_sequence() = default;

  explicit spin_sequence( std::vector<int8_t> s ) : spins( std::move( s ) )
  {
    require_input( !spins.empty(), "spins: empty sequence" );
    for ( auto v : spins )
    {
      require_input( v == 1 || v == -1, "spins: entries must be +1 or -1" );
    }
  }

  static spin_sequence parse( const std::string& text )
  {
    std::vector<int8_t> s;
    s.reserve( text.size() );
    for ( char c : text )
    {
      require_input( c == '+' || c == '-', "spins: expected a +/- string" );
      s.push_back( c == '+' ? 1 : -1 );
    }
    return spin_sequence( std::move( s ) );
  }

  /*! \brief The sequence hit by the substitution s = 2x - 1. */
  static spin_sequence from_point( const point_assignment& x )
  {
    std::vector<int8_t> s( x.arity() );
    for ( int i = 1; i <= x.arity(); ++i )
    {
      s[i - 1] = x.bit( i ) ? 1 : -1;
    }
    return spin_sequence( std::move( s ) );
  }

  int size() const { return static_cast<int>( spins.size() ); }

  std::string str() const
  {
    std::string s;
    s.reserve( spins.size() );
    for ( auto v : spins )
    {
      s += v > 0 ? '+' : '-';
    }
    return s;
  }
};

/*! \brief Autocorrelation energy: sum over d of the squared inner sums. */
inline long long labs_energy( const spin_sequence& s )
{
  const int N = s.size();
  require_input( N >= 2, "energy: sequence length must be at least 2" );
  long long energy = 0;
  for ( int d = 1; d < N; ++d )
  {
    long long c = 0;
    for ( int i = 0; i + d < N; ++i )
    {
      c += s.spins[i] * s.spins[i + d];
    }
    energy += c * c;
  }
  return energy;
}

/*! \brief Exact multilinear expansion of the energy after s = 2x - 1. */
inline multilinear_poly f_bern_poly( int N, const caps& limits = {} )
{
  require_input( N >= 3, "labs: N must be at least 3" );
  require_cap( N <= limits.labs_expand, "labs: N exceeds expansion cap" );

  std::map<uint32_t, long long> acc;
  for ( int d = 1; d < N; ++d )
  {
    /* (sum_i q_i)^2 with q_i = 4 x_i x_{i+d} - 2 x_i - 2 x_{i+d} + 1 */
    const int count = N - d;
    for ( int i = 1; i <= count; ++i )
    {
      const uint32_t ai = uint32_t( 1 ) << ( i - 1 );
      const uint32_t bi = uint32_t( 1 ) << ( i + d - 1 );
      const std::pair<uint32_t, long long> qi[4] = {
          { ai | bi, 4 }, { ai, -2 }, { bi, -2 }, { 0, 1 } };
      for ( int j = 1; j <= count; ++j )
      {
        const uint32_t aj = uint32_t( 1 ) << ( j - 1 );
        const uint32_t bj = uint32_t( 1 ) << ( j + d - 1 );
        const std::pair<uint32_t, long long> qj[4] = {
            { aj | bj, 4 }, { aj, -2 }, { bj, -2 }, { 0, 1 } };
        for ( const auto& [mi, ci] : qi )
        {
          for ( const auto& [mj, cj] : qj )
          {
            acc[mi | mj] += ci * cj;
          }
        }
      }
    }
  }

  multilinear_poly poly( N );
  for ( const auto& [mask, coeff] : acc )
  {
    if ( coeff != 0 )
    {
      poly.add_term( term_key::from_mask( mask ), rational( coeff ) );
    }
  }
  return poly;
}

/*! \brief Number of quadruples p<q<r<s with p+s = q+r, by direct enumeration.

  This is exactly the degree-4 support of the expansion, counted without
  building the polynomial.
*/
inline long long degree4_count( int N )
{
  require_input( N >= 4, "degree4 count: N must be at least 4" );
  long long count = 0;
  for ( int a = 1; 2 * a + 1 < N; ++a )
  {
    for ( int b = 1; 2 * a + b < N; ++b )
    {
      count += N - 2 * a - b;
    }
  }
  return count;
}

enum class ld_mode
{
  parity,    /* arithmetic progression of step 2, size N+1-d */
  full_range /* every integer in [-(N-d), N-d], size 2(N-d)+1 */
};

/*! \brief Candidate values of the d-th inner sum. */
inline std::vector<int> L_set( int N, int d, ld_mode mode )
{
  require_input( d >= 1 && d <= N - 1, "L_set: d out of range" );
  std::vector<int> values;
  const int top = N - d;
  const int step = mode == ld_mode::parity ? 2 : 1;
  for ( int v = -top; v <= top; v += step )
  {
    values.push_back( v );
  }
  return values;
}

enum class pair_var_mode
{
  upper_triangle, /* one y per i < j, as displayed */
  ordered_compat  /* one y per ordered pair i != j; rows still only for i < j */
};

struct labs_instance
{
  int N;
  ld_mode ld = ld_mode::parity;
  pair_var_mode pairs = pair_var_mode::upper_triangle;

  explicit labs_instance( int N_, ld_mode ld_ = ld_mode::parity,
                          pair_var_mode pairs_ = pair_var_mode::upper_triangle )
      : N( N_ ), ld( ld_ ), pairs( pairs_ )
  {
    require_input( N >= 3, "labs: N must be at least 3" );
  }

  static labs_instance compat( int N_ )
  {
    return labs_instance( N_, ld_mode::full_range, pair_var_mode::ordered_compat );
  }
};

namespace detail
{

inline std::string z_name( int d, int value )
{
  return "z" + std::to_string( d ) +
         ( value < 0 ? "_m" + std::to_string( -value ) : "_p" + std::to_string( value ) );
}

inline int inner_sum_at( const point_assignment& x, int d )
{
  int sum = 0;
  for ( int i = 1; i + d <= x.arity(); ++i )
  {
    sum += ( x.bit( i ) ? 1 : -1 ) * ( x.bit( i + d ) ? 1 : -1 );
  }
  return sum;
}

} /* namespace detail */

/*! \brief The monomial-wise standard IP: one binary per degree >= 2 monomial. */
inline milp_model standard_ip( int N, const caps& limits = {} )
{
  const auto poly = f_bern_poly( N, limits );

  milp_model model;
  detail::add_x_vars( model, N );
  for ( const auto& [key, coeff] : poly.terms() )
  {
    if ( key.degree() == 0 )
    {
      model.add_objective_offset( coeff );
    }
    else if ( key.degree() == 1 )
    {
      model.set_objective_term( key.indices[0] - 1, coeff );
    }
  }

  int ordinal = 0;
  for ( const auto& [key, coeff] : poly.terms() )
  {
    if ( key.degree() < 2 )
    {
      continue;
    }
    ++ordinal;
    const std::string t = std::to_string( ordinal );
    std::string zname = "z";
    for ( std::size_t i = 0; i < key.indices.size(); ++i )
    {
      zname += ( i == 0 ? "" : "_" ) + std::to_string( key.indices[i] );
    }
    const int z = model.add_binary( zname );
    model.set_objective_term( z, coeff );
    for ( int i : key.indices )
    {
      model.add_constraint( "short" + t + "_" + std::to_string( i ),
                            { { z, rational( 1 ) }, { i - 1, rational( -1 ) } }, row_sense::le,
                            rational( 0 ) );
    }
    /* 1 - z <= sum_I (1 - x_i)  <=>  sum_I x_i - z <= |I| - 1 */
    std::vector<lin_term> terms;
    for ( int i : key.indices )
    {
      terms.push_back( { i - 1, rational( 1 ) } );
    }
    terms.push_back( { z, rational( -1 ) } );
    model.add_constraint( "long" + t, std::move( terms ), row_sense::le,
                          rational( key.degree() - 1 ) );
  }
  return model;
}

/*! \brief Value indicators tied down by no-good rows only: O(N^2) variables,
  Theta(2^N N^2) rows. */
inline milp_model indicator_only_ip( int N, const caps& limits = {} )
{
  require_input( N >= 3, "labs: N must be at least 3" );
  require_cap( N <= limits.labs_indicator, "labs: N exceeds indicator-only cap" );

  milp_model model;
  detail::add_x_vars( model, N );

  std::vector<std::pair<std::pair<int, int>, int>> indicators; /* (d, value) -> var */
  for ( int d = 1; d < N; ++d )
  {
    for ( int value : L_set( N, d, ld_mode::parity ) )
    {
      const int z = model.add_binary( detail::z_name( d, value ) );
      model.set_objective_term( z, rational( static_cast<long long>( value ) * value ) );
      indicators.push_back( { { d, value }, z } );
    }
  }
  for ( const auto& [key, z] : indicators )
  {
    const auto [d, value] = key;
    boolean_fn g( N, [d, value]( const point_assignment& x ) {
      return detail::inner_sum_at( x, d ) == value;
    } );
    detail::append_nogood_rows( model, g, z, "ng" + std::to_string( d ) +
                                ( value < 0 ? "_m" + std::to_string( -value )
                                            : "_p" + std::to_string( value ) ),
                                limits );
  }
  return model;
}

/*! \brief The value-indicator model: pair variables plus convexity and
  selection rows per distance. */
inline milp_model value_indicator_ip( const labs_instance& inst )
{
  const int N = inst.N;
  milp_model model;
  detail::add_x_vars( model, N );

  /* pair variables; only the i < j ones appear in rows */
  std::map<std::pair<int, int>, int> y;
  auto pair_name = []( int i, int j ) {
    return "y" + std::to_string( i ) + "_" + std::to_string( j );
  };
  if ( inst.pairs == pair_var_mode::upper_triangle )
  {
    for ( int i = 1; i <= N; ++i )
    {
      for ( int j = i + 1; j <= N; ++j )
      {
        y[{ i, j }] = model.add_binary( pair_name( i, j ) );
      }
    }
  }
  else
  {
    for ( int i = 1; i <= N; ++i )
    {
      for ( int j = 1; j <= N; ++j )
      {
        if ( i != j )
        {
          y[{ i, j }] = model.add_binary( pair_name( i, j ) );
        }
      }
    }
  }

  std::map<std::pair<int, int>, int> z;
  for ( int d = 1; d < N; ++d )
  {
    for ( int value : L_set( N, d, inst.ld ) )
    {
      const int var = model.add_binary( detail::z_name( d, value ) );
      model.set_objective_term( var, rational( static_cast<long long>( value ) * value ) );
      z[{ d, value }] = var;
    }
  }

  for ( int i = 1; i <= N; ++i )
  {
    for ( int j = i + 1; j <= N; ++j )
    {
      const std::string suffix = "_" + std::to_string( i ) + "_" + std::to_string( j );
      const int yij = y.at( { i, j } );
      const int xi = i - 1, xj = j - 1;
      model.add_constraint( "same1" + suffix,
                            { { xi, rational( 1 ) }, { xj, rational( 1 ) }, { yij, rational( 1 ) } },
                            row_sense::ge, rational( 1 ) );
      model.add_constraint( "same2" + suffix,
                            { { xi, rational( 1 ) }, { xj, rational( -1 ) }, { yij, rational( -1 ) } },
                            row_sense::ge, rational( -1 ) );
      model.add_constraint( "same3" + suffix,
                            { { xi, rational( -1 ) }, { xj, rational( 1 ) }, { yij, rational( -1 ) } },
                            row_sense::ge, rational( -1 ) );
      model.add_constraint( "same4" + suffix,
                            { { xi, rational( 1 ) }, { xj, rational( 1 ) }, { yij, rational( -1 ) } },
                            row_sense::le, rational( 1 ) );
    }
  }
  for ( int d = 1; d < N; ++d )
  {
    std::vector<lin_term> terms;
    for ( int value : L_set( N, d, inst.ld ) )
    {
      terms.push_back( { z.at( { d, value } ), rational( 1 ) } );
    }
    model.add_constraint( "card" + std::to_string( d ), std::move( terms ), row_sense::eq,
                          rational( 1 ) );
  }
  for ( int d = 1; d < N; ++d )
  {
    /* sum_i (2 y_{i,i+d} - 1) = sum_l l z_{d,l} */
    std::vector<lin_term> terms;
    for ( int i = 1; i + d <= N; ++i )
    {
      terms.push_back( { y.at( { i, i + d } ), rational( 2 ) } );
    }
    for ( int value : L_set( N, d, inst.ld ) )
    {
      terms.push_back( { z.at( { d, value } ), rational( -value ) } );
    }
    model.add_constraint( "select" + std::to_string( d ), std::move( terms ), row_sense::eq,
                          rational( N - d ) );
  }
  return model;
}

/* --- exhaustive optimum ---------------------------------------------------*/

struct labs_result
{
  long long optimum = 0;
  spin_sequence witness;
  unsigned long long points = 0; /* sequences visited; s_1 = +1 fixed */
  double seconds = 0.0;
};

namespace detail
{

/* +1 sorts before -1, matching the '+'/'-' rendering */
inline bool spin_lex_less( const std::vector<int8_t>& a, const std::vector<int8_t>& b )
{
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    if ( a[i] != b[i] )
    {
      return a[i] > b[i];
    }
  }
  return false;
}

struct labs_block_result
{
  long long energy = 0;
  std::vector<int8_t> witness;
  bool valid = false;

  void absorb( long long e, const std::vector<int8_t>& s )
  {
    if ( !valid || e < energy || ( e == energy && spin_lex_less( s, witness ) ) )
    {
      energy = e;
      witness = s;
      valid = true;
    }
  }

  void merge( const labs_block_result& other )
  {
    if ( other.valid )
    {
      absorb( other.energy, other.witness );
    }
  }
};

/* Gray-code walk over spins [first_free, N); earlier spins are fixed. */
inline void labs_scan_block( std::vector<int8_t> s, int first_free, labs_block_result& best )
{
  const int N = static_cast<int>( s.size() );
  std::vector<long long> corr( N, 0 );
  long long energy = 0;
  for ( int d = 1; d < N; ++d )
  {
    long long c = 0;
    for ( int i = 0; i + d < N; ++i )
    {
      c += s[i] * s[i + d];
    }
    corr[d] = c;
    energy += c * c;
  }
  best.absorb( energy, s );

  const int free_count = N - first_free;
  const uint64_t steps = uint64_t( 1 ) << free_count;
  for ( uint64_t t = 1; t < steps; ++t )
  {
    const int p = first_free + std::countr_zero( t );
    for ( int d = 1; d < N; ++d )
    {
      long long delta = 0;
      if ( p + d < N )
      {
        delta += s[p] * s[p + d];
      }
      if ( p - d >= 0 )
      {
        delta += s[p - d] * s[p];
      }
      if ( delta != 0 )
      {
        const long long next = corr[d] - 2 * delta;
        energy += next * next - corr[d] * corr[d];
        corr[d] = next;
      }
    }
    s[p] = static_cast<int8_t>( -s[p] );
    best.absorb( energy, s );
  }
}

} /* namespace detail */

/*! \brief Exact optimum over all sequences, exploiting energy(s) = energy(-s)
  by fixing s_1 = +1.

  With more than one worker the search space is split by the leading free
  spins; block results combine by (energy, lexicographic witness), so the
  outcome does not depend on the worker count.
*/
inline labs_result exhaustive_solve( int N, int workers = 1, const caps& limits = {} )
{
  require_input( N >= 3, "labs: N must be at least 3" );
  require_cap( N <= limits.labs_exhaustive, "labs: N exceeds exhaustive-search cap" );
  require_input( workers >= 1, "labs: worker count must be positive" );

  const auto start = std::chrono::steady_clock::now();
  const int prefix_bits = workers > 1 ? std::min( N - 1, 6 ) : 0;

  detail::labs_block_result best;
  if ( prefix_bits == 0 )
  {
    std::vector<int8_t> s( N, 1 );
    detail::labs_scan_block( std::move( s ), 1, best );
  }
  else
  {
    const uint64_t blocks = uint64_t( 1 ) << prefix_bits;
    std::vector<detail::labs_block_result> results( workers );
    std::vector<std::thread> pool;
    for ( int w = 0; w < workers; ++w )
    {
      pool.emplace_back( [&, w]() {
        for ( uint64_t block = w; block < blocks; block += workers )
        {
          std::vector<int8_t> s( N, 1 );
          for ( int b = 0; b < prefix_bits; ++b )
          {
            s[1 + b] = ( block >> b ) & 1 ? -1 : 1;
          }
          detail::labs_scan_block( std::move( s ), 1 + prefix_bits, results[w] );
        }
      } );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
    for ( const auto& r : results )
    {
      best.merge( r );
    }
  }

  labs_result result;
  result.optimum = best.energy;
  result.witness = spin_sequence( best.witness );
  result.points = uint64_t( 1 ) << ( N - 1 );
  result.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  require_input( labs_energy( result.witness ) == result.optimum, "labs: witness self-check failed" );
  return result;
}

/*! \brief sum_d |L_d| = N(N+1)/2 - 1, the partial-sum upper bound on lc_B. */
inline long long lcB_upper( int N )
{
  require_input( N >= 3, "labs: N must be at least 3" );
  const long long bound = static_cast<long long>( N ) * ( N + 1 ) / 2 - 1;
  require_input( bound <= static_cast<long long>( N ) * N, "labs: bound exceeds N^2" );
  return bound;
}

/* --- comparison harness ----------------------------------------------------*/

struct table_options
{
  bool compat = true;   /* size-table variant of the value-indicator model */
  bool timings = false; /* fill time_s (breaks byte-for-byte reproducibility) */
  int workers = 1;
  int solve_max = 28;   /* skip the exhaustive optimum above this N */
  std::optional<solver_bridge_config> bridge;
};

/*! \brief CSV rows comparing the standard and value-indicator models.

  Columns: N,opt,std_vars,std_cons,std_bound,vi_vars,vi_cons,vi_bound,nodes,time_s.
  Fields that are unavailable (cap exceeded, no bridge) stay blank.
*/
inline std::string table_harness( int lo, int hi, const table_options& opts = {},
                                  const caps& limits = {} )
{
  require_input( lo >= 3 && hi >= lo, "table: need 3 <= lo <= hi" );
  std::ostringstream csv;
  csv << "N,opt,std_vars,std_cons,std_bound,vi_vars,vi_cons,vi_bound,nodes,time_s\n";
  auto bound_str = []( double v ) {
    char buf[64];
    std::snprintf( buf, sizeof buf, "%.6g", v );
    return std::string( buf );
  };
  for ( int N = lo; N <= hi; ++N )
  {
    std::string opt, nodes, time_s, std_vars, std_cons, std_bound, vi_bound;
    if ( N <= std::min( opts.solve_max, limits.labs_exhaustive ) )
    {
      const auto res = exhaustive_solve( N, opts.workers, limits );
      opt = std::to_string( res.optimum );
      nodes = std::to_string( res.points );
      if ( opts.timings )
      {
        time_s = bound_str( res.seconds );
      }
    }
    std::optional<milp_model> std_model;
    if ( N <= limits.labs_expand )
    {
      std_model = standard_ip( N, limits );
      const auto stats = std_model->stats();
      std_vars = std::to_string( stats.vars );
      std_cons = std::to_string( stats.cons );
    }
    const auto vi_model = value_indicator_ip(
        opts.compat ? labs_instance::compat( N ) : labs_instance( N ) );
    const auto vi_stats = vi_model.stats();
    if ( opts.bridge )
    {
      solver_bridge_config relax = *opts.bridge;
      relax.mode = solve_mode::lp_relaxation;
      if ( std_model )
      {
        std_bound = bound_str( solve_external( *std_model, relax ).objective );
      }
      /* the bound column always comes from the displayed (parity) variant;
         the full-range value sets of the compat variant admit a weaker
         relaxation that bounds nothing */
      const auto vi_relax = opts.compat ? value_indicator_ip( labs_instance( N ) ) : vi_model;
      vi_bound = bound_str( solve_external( vi_relax, relax ).objective );
    }
    csv << N << "," << opt << "," << std_vars << "," << std_cons << "," << std_bound << ","
        << vi_stats.vars << "," << vi_stats.cons << "," << vi_bound << "," << nodes << ","
        << time_s << "\n";
  }
  return csv.str();
}

} /* namespace pblin */
