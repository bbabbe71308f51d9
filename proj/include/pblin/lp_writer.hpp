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
  \file lp_writer.hpp
  \brief Deterministic LP-format export

  Variables and constraints appear in model order, so identical models yield
  byte-identical files.  Rationals are rendered as exact decimals when the
  denominator is of the form 2^a 5^b; otherwise the objective and every row
  are multiplied by one global integer scale, recorded in the `\ scale:`
  comment, which the solver bridge divides back out.  The objective's
  constant offset never enters the matrix; it rides in the `\ offset:`
  comment and is added back by the bridge.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "milp.hpp"
#include "rational.hpp"

namespace pblin
{

struct lp_write_options
{
  bool relax_integrality = false; /* drop Binary/General sections, keep bounds */
};

namespace detail
{

inline bool lp_name_ok( const std::string& name )
{
  if ( name.empty() || std::isdigit( static_cast<unsigned char>( name[0] ) ) ||
       name[0] == '.' || name[0] == 'e' || name[0] == 'E' )
  {
    return false;
  }
  for ( char c : name )
  {
    if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' )
    {
      return false;
    }
  }
  return true;
}

inline bool decimal_denominator( bigint den )
{
  while ( den % 2 == 0 )
  {
    den /= 2;
  }
  while ( den % 5 == 0 )
  {
    den /= 5;
  }
  return den == 1;
}

/* exact decimal expansion; requires a 2^a 5^b denominator */
inline std::string decimal_string( const rational& r )
{
  if ( r.is_integer() )
  {
    return r.num().str();
  }
  bigint den = r.den();
  int twos = 0, fives = 0;
  while ( den % 2 == 0 )
  {
    den /= 2;
    ++twos;
  }
  while ( den % 5 == 0 )
  {
    den /= 5;
    ++fives;
  }
  const int digits = std::max( twos, fives );
  bigint scaled = r.num();
  for ( int i = twos; i < digits; ++i )
  {
    scaled *= 2;
  }
  for ( int i = fives; i < digits; ++i )
  {
    scaled *= 5;
  }
  const bool negative = scaled < 0;
  std::string body = ( negative ? bigint( -scaled ) : scaled ).str();
  if ( static_cast<int>( body.size() ) <= digits )
  {
    body.insert( 0, digits + 1 - body.size(), '0' );
  }
  body.insert( body.size() - digits, "." );
  return ( negative ? "-" : "" ) + body;
}

inline bigint lcm( const bigint& a, const bigint& b )
{
  return a / boost::multiprecision::gcd( a, b ) * b;
}

/* appends " + c name" / " - c name"; leading term drops the padding */
inline void append_term( std::string& line, bool first, const rational& coeff,
                         const std::string& name )
{
  const rational mag = coeff.abs();
  std::string piece;
  if ( first )
  {
    piece = coeff.sign() < 0 ? "-" : "";
  }
  else
  {
    piece = coeff.sign() < 0 ? " - " : " + ";
  }
  if ( mag != rational( 1 ) )
  {
    piece += decimal_string( mag ) + " ";
  }
  piece += name;
  line += piece;
}

} /* namespace detail */

/*! \brief The global integer factor applied to the objective and rows on export. */
inline bigint lp_scale( const milp_model& model )
{
  bigint scale = 1;
  auto absorb = [&scale]( const rational& r ) {
    if ( !detail::decimal_denominator( r.den() ) )
    {
      scale = detail::lcm( scale, r.den() );
    }
  };
  for ( const auto& t : model.objective() )
  {
    absorb( t.coeff );
  }
  for ( const auto& c : model.constraints() )
  {
    for ( const auto& t : c.terms )
    {
      absorb( t.coeff );
    }
    absorb( c.rhs );
  }
  return scale;
}

inline void write_lp( const milp_model& model, std::ostream& os, const lp_write_options& opts = {} )
{
  for ( const auto& v : model.vars() )
  {
    require_input( detail::lp_name_ok( v.name ),
                   "lp: variable name '" + v.name + "' not representable" );
  }
  for ( const auto& c : model.constraints() )
  {
    require_input( detail::lp_name_ok( c.name ),
                   "lp: constraint name '" + c.name + "' not representable" );
  }

  /* one global scale clears every non-decimal denominator */
  const bigint scale = lp_scale( model );
  for ( const auto& v : model.vars() )
  {
    require_input( detail::decimal_denominator( v.lower.den() ) &&
                       detail::decimal_denominator( v.upper.den() ),
                   "lp: variable bound on '" + v.name + "' has no finite decimal expansion" );
  }
  const rational factor( scale );

  os << "\\ pblin model export\n";
  os << "\\ offset: " << model.objective_offset().str() << "\n";
  if ( scale != 1 )
  {
    os << "\\ scale: " << scale.str() << "\n";
  }

  os << "Minimize\n obj:";
  {
    std::string line;
    bool first = true;
    for ( const auto& t : model.objective() )
    {
      detail::append_term( line, first, t.coeff * factor, model.vars()[t.var].name );
      first = false;
    }
    if ( !line.empty() )
    {
      os << " " << line;
    }
    os << "\n";
  }

  os << "Subject To\n";
  for ( const auto& c : model.constraints() )
  {
    std::string line = " " + c.name + ":";
    bool first = true;
    std::string body;
    for ( const auto& t : c.terms )
    {
      detail::append_term( body, first, t.coeff * factor, model.vars()[t.var].name );
      first = false;
    }
    require_input( !body.empty(), "lp: constraint '" + c.name + "' has no terms" );
    line += " " + body + " " + sense_str( c.sense ) + " " + detail::decimal_string( c.rhs * factor );
    os << line << "\n";
  }

  os << "Bounds\n";
  for ( const auto& v : model.vars() )
  {
    if ( v.kind == var_kind::binary && !opts.relax_integrality )
    {
      continue; /* implied by the Binary section */
    }
    os << " " << detail::decimal_string( v.lower ) << " <= " << v.name
       << " <= " << detail::decimal_string( v.upper ) << "\n";
  }

  if ( !opts.relax_integrality )
  {
    bool any_binary = false;
    for ( const auto& v : model.vars() )
    {
      if ( v.kind == var_kind::binary )
      {
        if ( !any_binary )
        {
          os << "Binary\n";
          any_binary = true;
        }
        os << " " << v.name << "\n";
      }
    }
    bool any_integer = false;
    for ( const auto& v : model.vars() )
    {
      if ( v.kind == var_kind::integer )
      {
        if ( !any_integer )
        {
          os << "General\n";
          any_integer = true;
        }
        os << " " << v.name << "\n";
      }
    }
  }
  os << "End\n";
}

inline std::string lp_to_string( const milp_model& model, const lp_write_options& opts = {} )
{
  std::ostringstream os;
  write_lp( model, os, opts );
  return os.str();
}

} /* namespace pblin */
