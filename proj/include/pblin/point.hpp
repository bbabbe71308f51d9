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
  \file point.hpp
  \brief A point of the Boolean cube

  Variable indices are 1-based everywhere in the public interface.  When a
  point is identified with an integer, bit i-1 of the index carries x_i.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pblin
{

class point_assignment
{
public:
  point_assignment() = default;

  explicit point_assignment( std::vector<uint8_t> bits ) : bits_( std::move( bits ) )
  {
    for ( auto b : bits_ )
    {
      require_input( b <= 1, "point: entries must be 0 or 1" );
    }
  }

  static point_assignment from_index( int arity, uint64_t index )
  {
    std::vector<uint8_t> bits( arity );
    for ( int i = 0; i < arity; ++i )
    {
      bits[i] = ( index >> i ) & 1u;
    }
    return point_assignment( std::move( bits ) );
  }

  static point_assignment zero( int arity )
  {
    return point_assignment( std::vector<uint8_t>( arity, 0 ) );
  }

  static point_assignment unit( int arity, int i )
  {
    auto p = zero( arity );
    p.bits_[i - 1] = 1;
    return p;
  }

  int arity() const { return static_cast<int>( bits_.size() ); }

  /* 1-based access */
  bool bit( int i ) const { return bits_[i - 1] != 0; }

  uint64_t index() const
  {
    uint64_t v = 0;
    for ( int i = 0; i < arity(); ++i )
    {
      v |= static_cast<uint64_t>( bits_[i] ) << i;
    }
    return v;
  }

  const std::vector<uint8_t>& bits() const { return bits_; }

  std::string str() const
  {
    std::string s;
    s.reserve( bits_.size() );
    for ( auto b : bits_ )
    {
      s += b ? '1' : '0';
    }
    return s;
  }

  friend bool operator==( const point_assignment& a, const point_assignment& b )
  {
    return a.bits_ == b.bits_;
  }

private:
  std::vector<uint8_t> bits_;
};

} /* namespace pblin */
