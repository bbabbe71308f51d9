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
  \file multilinear.hpp
  \brief Exact multilinear polynomials over the Boolean cube

  A pseudo-Boolean function has a unique multilinear polynomial
  representation; this type is that canonical form.  Terms are stored sorted
  by (degree, index list) with zero coefficients dropped, so two polynomials
  are equal if and only if their term maps are equal.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "text.hpp"

namespace pblin
{

/*! \brief Monomial index set: strictly increasing 1-based variable indices.

  The empty key denotes the constant term.
*/
struct term_key
{
  std::vector<int> indices;

  term_key() = default;
  term_key( std::initializer_list<int> init ) : indices( init ) { canonicalize(); }
  explicit term_key( std::vector<int> init ) : indices( std::move( init ) ) { canonicalize(); }

  int degree() const { return static_cast<int>( indices.size() ); }

  uint64_t mask() const
  {
    uint64_t m = 0;
    for ( int i : indices )
    {
      m |= uint64_t( 1 ) << ( i - 1 );
    }
    return m;
  }

  static term_key from_mask( uint64_t mask )
  {
    term_key key;
    for ( int i = 1; mask != 0; ++i, mask >>= 1 )
    {
      if ( mask & 1u )
      {
        key.indices.push_back( i );
      }
    }
    return key;
  }

  friend bool operator==( const term_key& a, const term_key& b )
  {
    return a.indices == b.indices;
  }

private:
  void canonicalize()
  {
    std::sort( indices.begin(), indices.end() );
    require_input( std::adjacent_find( indices.begin(), indices.end() ) == indices.end(),
                   "term: duplicate variable index" );
    require_input( indices.empty() || indices.front() >= 1, "term: indices are 1-based" );
  }
};

/*! \brief Canonical term order: by degree, then lexicographic on the index list. */
struct term_key_less
{
  bool operator()( const term_key& a, const term_key& b ) const
  {
    if ( a.indices.size() != b.indices.size() )
    {
      return a.indices.size() < b.indices.size();
    }
    return a.indices < b.indices;
  }
};

class multilinear_poly
{
public:
  using term_map = std::map<term_key, rational, term_key_less>;

  explicit multilinear_poly( int arity = 0 ) : arity_( arity )
  {
    require_input( arity >= 0, "poly: negative arity" );
  }

  int arity() const { return arity_; }
  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /*! \brief Accumulates `coeff` onto the term `key`; zero results are dropped. */
  void add_term( term_key key, rational coeff )
  {
    require_input( key.indices.empty() || key.indices.back() <= arity_,
                   "poly: term index exceeds arity" );
    if ( coeff.is_zero() )
    {
      return;
    }
    auto it = terms_.find( key );
    if ( it == terms_.end() )
    {
      terms_.emplace( std::move( key ), std::move( coeff ) );
      return;
    }
    it->second += coeff;
    if ( it->second.is_zero() )
    {
      terms_.erase( it );
    }
  }

  rational coefficient( const term_key& key ) const
  {
    auto it = terms_.find( key );
    return it == terms_.end() ? rational( 0 ) : it->second;
  }

  /*! \brief Exact evaluation at a cube point. */
  rational evaluate( const point_assignment& x ) const
  {
    require_input( x.arity() == arity_, "poly: arity mismatch in evaluation" );
    const uint64_t xm = x.index();
    rational value( 0 );
    for ( const auto& [key, coeff] : terms_ )
    {
      const uint64_t km = key.mask();
      if ( ( km & xm ) == km )
      {
        value += coeff;
      }
    }
    return value;
  }

  bool is_affine() const
  {
    return terms_.empty() || std::prev( terms_.end() )->first.degree() <= 1;
  }

  int degree() const
  {
    return terms_.empty() ? 0 : std::prev( terms_.end() )->first.degree();
  }

  /*! \brief Number of stored monomials of degree at least two.

    This equals the linearization complexity with respect to the monomial
    family.
  */
  int monomial_count_deg2plus() const
  {
    int count = 0;
    for ( const auto& [key, coeff] : terms_ )
    {
      (void)coeff;
      if ( key.degree() >= 2 )
      {
        ++count;
      }
    }
    return count;
  }

  friend bool operator==( const multilinear_poly& a, const multilinear_poly& b )
  {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

private:
  int arity_;
  term_map terms_;
};

/*! \brief Interpolates the unique multilinear polynomial matching `values`.

  Tabulates all 2^n function values and applies the subset Moebius inversion
  in place: the coefficient of the monomial with support S is
  sum over T subseteq S of (-1)^{|S minus T|} f(chi(T)).
*/
inline multilinear_poly interpolate( int arity,
                                     const std::function<rational( const point_assignment& )>& values,
                                     const caps& limits = {} )
{
  require_input( arity >= 0, "interpolate: negative arity" );
  require_cap( arity <= limits.enumeration,
               "interpolate: arity " + std::to_string( arity ) + " exceeds enumeration cap " +
                   std::to_string( limits.enumeration ) );

  const uint64_t size = uint64_t( 1 ) << arity;
  std::vector<rational> work( size );
  for ( uint64_t m = 0; m < size; ++m )
  {
    work[m] = values( point_assignment::from_index( arity, m ) );
  }
  for ( int b = 0; b < arity; ++b )
  {
    const uint64_t bit = uint64_t( 1 ) << b;
    for ( uint64_t m = 0; m < size; ++m )
    {
      if ( m & bit )
      {
        work[m] -= work[m ^ bit];
      }
    }
  }

  multilinear_poly poly( arity );
  for ( uint64_t m = 0; m < size; ++m )
  {
    if ( !work[m].is_zero() )
    {
      poly.add_term( term_key::from_mask( m ), std::move( work[m] ) );
    }
  }
  return poly;
}

/*! \brief The nonlinear part: f minus the affine function through the origin
  and the unit vectors.

  In coefficient space this is exactly the polynomial with all terms of
  degree at most one removed; it vanishes at the zero vector and at every
  unit vector and has the same linearization complexity as f.
*/
inline multilinear_poly nonlinear_part( const multilinear_poly& f )
{
  multilinear_poly tilde( f.arity() );
  for ( const auto& [key, coeff] : f.terms() )
  {
    if ( key.degree() >= 2 )
    {
      tilde.add_term( key, coeff );
    }
  }
  return tilde;
}

/* --- text format ---------------------------------------------------------
 *
 * Header line `n=<arity>`, then one term per line:
 *   `<coeff> * x<i>*x<j>*...`   (constant term as a bare `<coeff>`)
 * with coefficients rendered as `p/q` or an integer.
 */

inline void write_poly( const multilinear_poly& poly, std::ostream& os )
{
  os << "n=" << poly.arity() << "\n";
  for ( const auto& [key, coeff] : poly.terms() )
  {
    os << coeff.str();
    if ( key.degree() > 0 )
    {
      os << " *";
      for ( std::size_t i = 0; i < key.indices.size(); ++i )
      {
        os << ( i == 0 ? " " : "*" ) << "x" << key.indices[i];
      }
    }
    os << "\n";
  }
}

inline std::string poly_to_string( const multilinear_poly& poly )
{
  std::ostringstream os;
  write_poly( poly, os );
  return os.str();
}

inline multilinear_poly read_poly( std::istream& is )
{
  std::string line;
  int arity = -1;
  while ( std::getline( is, line ) )
  {
    line = detail::strip( line );
    if ( line.empty() || line[0] == '#' )
    {
      continue;
    }
    require_input( line.rfind( "n=", 0 ) == 0, "poly: expected header line n=<arity>" );
    try
    {
      arity = std::stoi( line.substr( 2 ) );
    }
    catch ( const std::exception& )
    {
      throw input_error( "poly: bad arity in header '" + line + "'" );
    }
    break;
  }
  require_input( arity >= 0, "poly: missing header line n=<arity>" );

  multilinear_poly poly( arity );
  while ( std::getline( is, line ) )
  {
    line = detail::strip( line );
    if ( line.empty() || line[0] == '#' )
    {
      continue;
    }
    std::string coeff_text = line;
    std::string vars_text;
    if ( const auto star = line.find( '*' ); star != std::string::npos )
    {
      coeff_text = detail::strip( line.substr( 0, star ) );
      vars_text = detail::strip( line.substr( star + 1 ) );
    }
    const rational coeff = rational::parse( coeff_text );
    std::vector<int> indices;
    std::size_t pos = 0;
    while ( pos < vars_text.size() )
    {
      auto next = vars_text.find( '*', pos );
      if ( next == std::string::npos )
      {
        next = vars_text.size();
      }
      const std::string var = detail::strip( vars_text.substr( pos, next - pos ) );
      require_input( var.size() >= 2 && var[0] == 'x', "poly: bad variable '" + var + "'" );
      try
      {
        indices.push_back( std::stoi( var.substr( 1 ) ) );
      }
      catch ( const std::exception& )
      {
        throw input_error( "poly: bad variable '" + var + "'" );
      }
      pos = next + 1;
    }
    poly.add_term( term_key( std::move( indices ) ), coeff );
  }
  return poly;
}

inline multilinear_poly poly_from_string( const std::string& text )
{
  std::istringstream is( text );
  return read_poly( is );
}

} /* namespace pblin */
