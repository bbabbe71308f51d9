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
  \file boolean_fn.hpp
  \brief Arbitrary Boolean functions, with on-demand truth tables

  Truth table bit ordering: position v holds the value at the point whose
  index is v, i.e. bit i-1 of v carries x_i.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multilinear.hpp"
#include "point.hpp"

namespace pblin
{

class boolean_fn
{
public:
  using evaluator = std::function<bool( const point_assignment& )>;

  boolean_fn() = default;

  boolean_fn( int arity, evaluator fn ) : arity_( arity ), fn_( std::move( fn ) )
  {
    require_input( arity >= 0, "boolean function: negative arity" );
  }

  static boolean_fn from_table( int arity, std::vector<uint8_t> table )
  {
    require_input( table.size() == ( std::size_t( 1 ) << arity ),
                   "boolean function: table size must be 2^arity" );
    for ( auto b : table )
    {
      require_input( b <= 1, "boolean function: table entries must be 0 or 1" );
    }
    boolean_fn fn;
    fn.arity_ = arity;
    fn.table_ = std::move( table ); /* operator() and truth_table() read the table directly */
    return fn;
  }

  int arity() const { return arity_; }

  bool operator()( const point_assignment& x ) const
  {
    require_input( x.arity() == arity_, "boolean function: arity mismatch" );
    if ( !table_.empty() )
    {
      return table_[x.index()] != 0;
    }
    return fn_( x );
  }

  /*! \brief Materializes (and caches) the full 2^n table. */
  const std::vector<uint8_t>& truth_table( const caps& limits = {} ) const
  {
    if ( table_.empty() && arity_ >= 0 )
    {
      require_cap( arity_ <= limits.table_arity,
                   "boolean function: arity exceeds table materialization cap" );
      table_.resize( std::size_t( 1 ) << arity_ );
      for ( uint64_t v = 0; v < table_.size(); ++v )
      {
        table_[v] = fn_( point_assignment::from_index( arity_, v ) ) ? 1 : 0;
      }
    }
    return table_;
  }

private:
  int arity_ = 0;
  evaluator fn_;
  mutable std::vector<uint8_t> table_;
};

/* --- truth table text format ---------------------------------------------
 *
 * Header `n=<arity>`, then a single bitstring of length 2^n; character v
 * (0-based) is the value at point index v.  Whitespace between characters is
 * ignored so tables may be wrapped.
 */

inline boolean_fn read_truth_table( std::istream& is )
{
  std::string line;
  int arity = -1;
  std::string bits;
  while ( std::getline( is, line ) )
  {
    line = detail::strip( line );
    if ( line.empty() || line[0] == '#' )
    {
      continue;
    }
    if ( arity < 0 )
    {
      require_input( line.rfind( "n=", 0 ) == 0, "truth table: expected header line n=<arity>" );
      try
      {
        arity = std::stoi( line.substr( 2 ) );
      }
      catch ( const std::exception& )
      {
        throw input_error( "truth table: bad arity" );
      }
      require_input( arity >= 0 && arity <= 24, "truth table: arity out of range" );
      continue;
    }
    for ( char c : line )
    {
      if ( c == '0' || c == '1' )
      {
        bits += c;
      }
      else
      {
        require_input( c == ' ' || c == '\t', "truth table: bits must be 0/1" );
      }
    }
  }
  require_input( arity >= 0, "truth table: missing header" );
  require_input( bits.size() == ( std::size_t( 1 ) << arity ),
                 "truth table: expected 2^n bits, got " + std::to_string( bits.size() ) );
  std::vector<uint8_t> table( bits.size() );
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    table[i] = bits[i] == '1' ? 1 : 0;
  }
  return boolean_fn::from_table( arity, std::move( table ) );
}

inline void write_truth_table( const boolean_fn& fn, std::ostream& os, const caps& limits = {} )
{
  os << "n=" << fn.arity() << "\n";
  for ( auto b : fn.truth_table( limits ) )
  {
    os << ( b ? '1' : '0' );
  }
  os << "\n";
}

} /* namespace pblin */
