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
  \file formulations.hpp
  \brief IP formulations for linearizations

  Two builders: the per-product Fortet system (perfect per product) and the
  no-good system that excludes one vertex/value combination per row and
  exists for every Boolean function.  The no-good separation routine checks
  the row of the nearest vertex and of its n single-coordinate flips, so it
  needs only n+1 function evaluations.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolean_fn.hpp"
#include "errors.hpp"
#include "milp.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "signed_product.hpp"

namespace pblin
{

struct linear_part
{
  std::vector<rational> coeffs; /* a, one per variable; may be empty for zero */
  rational offset;              /* beta */
};

namespace detail
{

inline void add_x_vars( milp_model& model, int arity )
{
  for ( int i = 1; i <= arity; ++i )
  {
    model.add_binary( "x" + std::to_string( i ) );
  }
}

inline void add_linear_objective( milp_model& model, const linear_part& linear, int arity )
{
  require_input( linear.coeffs.empty() || static_cast<int>( linear.coeffs.size() ) == arity,
                 "formulation: linear part arity mismatch" );
  for ( std::size_t i = 0; i < linear.coeffs.size(); ++i )
  {
    model.set_objective_term( static_cast<int>( i ), linear.coeffs[i] );
  }
  model.add_objective_offset( linear.offset );
}

} /* namespace detail */

/*! \brief Fortet system for a weighted list of signed products.

  Per product t with sets (I, J): auxiliary binary f<t>, rows
    f <= x_i            (i in I)
    f <= 1 - x_j        (j in J)
    1 - f <= sum_I (1-x_i) + sum_J x_j
  plus the objective a.x + beta + sum_t b_t f_t.
*/
inline milp_model fortet_model( const linear_part& linear,
                                const std::vector<std::pair<signed_product, rational>>& products,
                                int arity )
{
  milp_model model;
  detail::add_x_vars( model, arity );
  detail::add_linear_objective( model, linear, arity );

  int ordinal = 0;
  for ( const auto& [g, weight] : products )
  {
    ++ordinal;
    require_input( g.degree() >= 1, "fortet: empty product" );
    require_input( g.max_index() <= arity, "fortet: product index out of range" );
    const std::string t = std::to_string( ordinal );
    const int f = model.add_binary( "f" + t );
    model.set_objective_term( f, weight );

    for ( int i : g.positive )
    {
      model.add_constraint( "short" + t + "_" + std::to_string( i ),
                            { { f, rational( 1 ) }, { i - 1, rational( -1 ) } }, row_sense::le,
                            rational( 0 ) );
    }
    for ( int j : g.complemented )
    {
      model.add_constraint( "shortc" + t + "_" + std::to_string( j ),
                            { { f, rational( 1 ) }, { j - 1, rational( 1 ) } }, row_sense::le,
                            rational( 1 ) );
    }
    /* 1 - f <= sum_I (1-x_i) + sum_J x_j  <=>  sum_I x_i - sum_J x_j - f <= |I| - 1 */
    std::vector<lin_term> terms;
    for ( int i : g.positive )
    {
      terms.push_back( { i - 1, rational( 1 ) } );
    }
    for ( int j : g.complemented )
    {
      terms.push_back( { j - 1, rational( -1 ) } );
    }
    terms.push_back( { f, rational( -1 ) } );
    model.add_constraint( "long" + t, std::move( terms ), row_sense::le,
                          rational( static_cast<long long>( g.positive.size() ) - 1 ) );
  }
  return model;
}

namespace detail
{

/*! \brief Emits the 2^n no-good rows tying `indicator` to `fn`. */
inline void append_nogood_rows( milp_model& model, const boolean_fn& fn, int indicator,
                                const std::string& prefix, const caps& limits )
{
  const int n = fn.arity();
  const auto& table = fn.truth_table( limits );
  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << n ); ++v )
  {
    std::vector<lin_term> terms;
    long long ones = 0;
    for ( int i = 1; i <= n; ++i )
    {
      if ( v & ( uint64_t( 1 ) << ( i - 1 ) ) )
      {
        terms.push_back( { i - 1, rational( -1 ) } );
        ++ones;
      }
      else
      {
        terms.push_back( { i - 1, rational( 1 ) } );
      }
    }
    rational rhs( 1 - ones );
    if ( table[v] )
    {
      terms.push_back( { indicator, rational( 1 ) } );
    }
    else
    {
      terms.push_back( { indicator, rational( -1 ) } );
      rhs -= rational( 1 );
    }
    model.add_constraint( prefix + "_v" + std::to_string( v ), std::move( terms ), row_sense::ge,
                          std::move( rhs ) );
  }
}

} /* namespace detail */

/*! \brief The full no-good system: one binary per function, 2^n rows per function. */
inline milp_model nogood_model( const std::vector<std::pair<boolean_fn, rational>>& fns,
                                const linear_part& linear, int arity, const caps& limits = {} )
{
  require_cap( arity <= limits.nogood_arity, "nogood: arity exceeds cap" );
  milp_model model;
  detail::add_x_vars( model, arity );
  detail::add_linear_objective( model, linear, arity );

  int ordinal = 0;
  for ( const auto& [fn, weight] : fns )
  {
    ++ordinal;
    require_input( fn.arity() == arity, "nogood: function arity mismatch" );
    const std::string t = std::to_string( ordinal );
    const int y = model.add_binary( "g" + t );
    model.set_objective_term( y, weight );
    detail::append_nogood_rows( model, fn, y, "ng" + t, limits );
  }
  return model;
}

/*! \brief A violated no-good row found by the nearest-vertex procedure. */
struct nogood_cut
{
  point_assignment vertex;
  bool indicator_one;   /* row uses y (function value 1) or 1-y (value 0) */
  double violation;     /* positive amount by which the row is violated */

  std::string str() const
  {
    std::string lhs;
    for ( int i = 1; i <= vertex.arity(); ++i )
    {
      if ( !lhs.empty() )
      {
        lhs += " + ";
      }
      lhs += vertex.bit( i ) ? "(1-x" + std::to_string( i ) + ")" : "x" + std::to_string( i );
    }
    lhs += indicator_one ? " + y" : " + (1-y)";
    return lhs + " >= 1";
  }
};

/*! \brief Separation for the no-good system.

  Rounds x-hat to the nearest vertex (ties toward 1), then tests the rows of
  that vertex and of all single-coordinate flips; returns the most violated
  row, or nothing if all n+1 candidate rows hold.  Evaluates g at most n+1
  times.
*/
inline std::optional<nogood_cut> separate_nogood( const boolean_fn& g, double y_value,
                                                  const std::vector<double>& x_hat )
{
  const int n = g.arity();
  require_input( static_cast<int>( x_hat.size() ) == n, "separate: arity mismatch" );

  std::vector<uint8_t> base( n );
  for ( int i = 0; i < n; ++i )
  {
    base[i] = x_hat[i] >= 0.5 ? 1 : 0;
  }

  std::optional<nogood_cut> best;
  for ( int flip = 0; flip <= n; ++flip )
  {
    auto bits = base;
    if ( flip > 0 )
    {
      bits[flip - 1] ^= 1;
    }
    const point_assignment vertex( bits );
    const bool value = g( vertex );
    double lhs = value ? y_value : 1.0 - y_value;
    for ( int i = 1; i <= n; ++i )
    {
      lhs += vertex.bit( i ) ? 1.0 - x_hat[i - 1] : x_hat[i - 1];
    }
    const double violation = 1.0 - lhs;
    if ( violation > 0 && ( !best || violation > best->violation ) )
    {
      best = nogood_cut{ vertex, value, violation };
    }
  }
  return best;
}

} /* namespace pblin */
