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
  \file certificate.hpp
  \brief Linearization certificates and their enumeration check

  A certificate witnesses f(x) = a.x + beta + sum_i b_i g_i(x) on the whole
  cube.  g_i descriptors are either signed products (families M and C) or
  explicit truth tables (family B).
*/

#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "boolean_fn.hpp"
#include "errors.hpp"
#include "multilinear.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "signed_product.hpp"

namespace pblin
{

enum class fn_family
{
  monomial,
  product,
  boolean
};

inline char family_tag( fn_family f )
{
  switch ( f )
  {
  case fn_family::monomial:
    return 'M';
  case fn_family::product:
    return 'C';
  default:
    return 'B';
  }
}

struct certificate_term
{
  fn_family family = fn_family::product;
  signed_product product;      /* for M / C */
  std::vector<uint8_t> table;  /* for B; indexed by point index */
  rational weight;             /* b_i, nonzero */

  bool evaluate( const point_assignment& x ) const
  {
    if ( family == fn_family::boolean )
    {
      return table[x.index()] != 0;
    }
    return product.evaluate( x );
  }
};

struct linearization_certificate
{
  int arity = 0;
  std::vector<rational> linear; /* a, one entry per variable */
  rational offset;              /* beta */
  std::vector<certificate_term> terms;

  std::size_t size() const { return terms.size(); }

  rational evaluate( const point_assignment& x ) const
  {
    rational value = offset;
    for ( int i = 1; i <= arity; ++i )
    {
      if ( x.bit( i ) )
      {
        value += linear[i - 1];
      }
    }
    for ( const auto& term : terms )
    {
      if ( term.evaluate( x ) )
      {
        value += term.weight;
      }
    }
    return value;
  }
};

/*! \brief Checks the defining identity at every point of the cube, exactly. */
inline bool verify_certificate( const std::function<rational( const point_assignment& )>& f,
                                int arity, const linearization_certificate& cert,
                                const caps& limits = {} )
{
  require_input( cert.arity == arity && static_cast<int>( cert.linear.size() ) == arity,
                 "certificate: arity mismatch" );
  require_cap( arity <= limits.enumeration, "certificate: arity exceeds enumeration cap" );
  for ( const auto& term : cert.terms )
  {
    require_input( !term.weight.is_zero(), "certificate: zero term weight" );
    if ( term.family == fn_family::boolean )
    {
      require_input( term.table.size() == ( std::size_t( 1 ) << arity ),
                     "certificate: truth table size mismatch" );
    }
    else
    {
      require_input( term.product.max_index() <= arity, "certificate: product index out of range" );
    }
  }
  for ( uint64_t v = 0; v < ( uint64_t( 1 ) << arity ); ++v )
  {
    const auto x = point_assignment::from_index( arity, v );
    if ( f( x ) != cert.evaluate( x ) )
    {
      return false;
    }
  }
  return true;
}

/* --- text format ----------------------------------------------------------
 *
 *   arity=3
 *   size=1
 *   beta=-1
 *   a1=1
 *   a2=1
 *   a3=1
 *   term C I={} J={1,2,3} b=1
 *   term B tt=01101001 b=1/2
 */

inline void write_certificate( const linearization_certificate& cert, std::ostream& os )
{
  os << "arity=" << cert.arity << "\n";
  os << "size=" << cert.size() << "\n";
  os << "beta=" << cert.offset.str() << "\n";
  for ( int i = 1; i <= cert.arity; ++i )
  {
    os << "a" << i << "=" << cert.linear[i - 1].str() << "\n";
  }
  for ( const auto& term : cert.terms )
  {
    os << "term " << family_tag( term.family );
    if ( term.family == fn_family::boolean )
    {
      os << " tt=";
      for ( auto b : term.table )
      {
        os << ( b ? '1' : '0' );
      }
    }
    else
    {
      os << " " << term.product.str();
    }
    os << " b=" << term.weight.str() << "\n";
  }
}

inline std::string certificate_to_string( const linearization_certificate& cert )
{
  std::ostringstream os;
  write_certificate( cert, os );
  return os.str();
}

namespace detail
{

inline std::vector<int> parse_index_set( const std::string& text )
{
  require_input( text.size() >= 2 && text.front() == '{' && text.back() == '}',
                 "certificate: bad index set '" + text + "'" );
  std::vector<int> indices;
  std::string body = text.substr( 1, text.size() - 2 );
  std::size_t pos = 0;
  while ( pos < body.size() )
  {
    auto comma = body.find( ',', pos );
    if ( comma == std::string::npos )
    {
      comma = body.size();
    }
    const std::string item = strip( body.substr( pos, comma - pos ) );
    if ( !item.empty() )
    {
      try
      {
        indices.push_back( std::stoi( item ) );
      }
      catch ( const std::exception& )
      {
        throw input_error( "certificate: bad index '" + item + "'" );
      }
    }
    pos = comma + 1;
  }
  return indices;
}

} /* namespace detail */

inline linearization_certificate read_certificate( std::istream& is )
{
  linearization_certificate cert;
  std::string line;
  bool have_arity = false;
  auto expect_key = []( const std::string& s, const std::string& key ) {
    require_input( s.rfind( key, 0 ) == 0, "certificate: expected '" + key + "...'" );
    return s.substr( key.size() );
  };
  while ( std::getline( is, line ) )
  {
    line = detail::strip( line );
    if ( line.empty() || line[0] == '#' )
    {
      continue;
    }
    if ( !have_arity )
    {
      cert.arity = std::stoi( expect_key( line, "arity=" ) );
      require_input( cert.arity >= 0, "certificate: negative arity" );
      cert.linear.assign( cert.arity, rational( 0 ) );
      have_arity = true;
    }
    else if ( line.rfind( "size=", 0 ) == 0 )
    {
      /* informative; validated after parsing */
    }
    else if ( line.rfind( "beta=", 0 ) == 0 )
    {
      cert.offset = rational::parse( line.substr( 5 ) );
    }
    else if ( line[0] == 'a' )
    {
      const auto eq = line.find( '=' );
      require_input( eq != std::string::npos, "certificate: bad line '" + line + "'" );
      const int i = std::stoi( line.substr( 1, eq - 1 ) );
      require_input( i >= 1 && i <= cert.arity, "certificate: linear index out of range" );
      cert.linear[i - 1] = rational::parse( line.substr( eq + 1 ) );
    }
    else if ( line.rfind( "term ", 0 ) == 0 )
    {
      std::istringstream ls( line.substr( 5 ) );
      std::string tag;
      ls >> tag;
      require_input( tag == "M" || tag == "C" || tag == "B", "certificate: bad family tag" );
      certificate_term term;
      std::string field;
      std::string I, J, tt, b;
      while ( ls >> field )
      {
        if ( field.rfind( "I=", 0 ) == 0 )
        {
          I = field.substr( 2 );
        }
        else if ( field.rfind( "J=", 0 ) == 0 )
        {
          J = field.substr( 2 );
        }
        else if ( field.rfind( "tt=", 0 ) == 0 )
        {
          tt = field.substr( 3 );
        }
        else if ( field.rfind( "b=", 0 ) == 0 )
        {
          b = field.substr( 2 );
        }
        else
        {
          throw input_error( "certificate: unexpected field '" + field + "'" );
        }
      }
      require_input( !b.empty(), "certificate: term missing weight" );
      term.weight = rational::parse( b );
      require_input( !term.weight.is_zero(), "certificate: zero term weight" );
      if ( tag == "B" )
      {
        term.family = fn_family::boolean;
        require_input( tt.size() == ( std::size_t( 1 ) << cert.arity ),
                       "certificate: truth table must have 2^n bits" );
        term.table.resize( tt.size() );
        for ( std::size_t i = 0; i < tt.size(); ++i )
        {
          require_input( tt[i] == '0' || tt[i] == '1', "certificate: bad truth table bit" );
          term.table[i] = tt[i] == '1' ? 1 : 0;
        }
      }
      else
      {
        term.family = tag == "M" ? fn_family::monomial : fn_family::product;
        term.product = signed_product( detail::parse_index_set( I.empty() ? "{}" : I ),
                                       detail::parse_index_set( J.empty() ? "{}" : J ) );
        require_input( term.product.max_index() <= cert.arity,
                       "certificate: product index out of range" );
        require_input( tag == "C" || term.product.is_monomial(),
                       "certificate: family M term with complemented indices" );
      }
      cert.terms.push_back( std::move( term ) );
    }
    else
    {
      throw input_error( "certificate: unexpected line '" + line + "'" );
    }
  }
  require_input( have_arity, "certificate: missing arity header" );
  return cert;
}

inline linearization_certificate certificate_from_string( const std::string& text )
{
  std::istringstream is( text );
  return read_certificate( is );
}

/*! \brief The monomial-family certificate read off a polynomial: one term per
  degree >= 2 monomial, affine part in (a, beta). */
inline linearization_certificate monomial_certificate( const multilinear_poly& f )
{
  linearization_certificate cert;
  cert.arity = f.arity();
  cert.linear.assign( f.arity(), rational( 0 ) );
  for ( const auto& [key, coeff] : f.terms() )
  {
    if ( key.degree() == 0 )
    {
      cert.offset = coeff;
    }
    else if ( key.degree() == 1 )
    {
      cert.linear[key.indices[0] - 1] = coeff;
    }
    else
    {
      certificate_term term;
      term.family = fn_family::monomial;
      term.product = signed_product( key.indices, {} );
      term.weight = coeff;
      cert.terms.push_back( std::move( term ) );
    }
  }
  return cert;
}

} /* namespace pblin */
