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

#pragma once

#include <stdexcept>
#include <string>

namespace pblin
{

/*! \brief Base class of all pblin errors. */
class error : public std::runtime_error
{
public:
  explicit error( const std::string& what ) : std::runtime_error( what ) {}
};

/*! \brief Malformed or inconsistent input (arity mismatch, parse failure, bad index). */
class input_error : public error
{
public:
  explicit input_error( const std::string& what ) : error( what ) {}
};

/*! \brief A desk-scale resource cap was exceeded (enumeration size, search depth). */
class cap_error : public error
{
public:
  explicit cap_error( const std::string& what ) : error( what ) {}
};

/*! \brief External solver bridge failure (launch, I/O, unparsable output). */
class bridge_error : public error
{
public:
  explicit bridge_error( const std::string& what ) : error( what ) {}
};

/*! \brief Enumeration caps that keep every exhaustive sweep desk-scale.

  All caps can be lowered freely.  Raising one beyond its default is an
  explicit opt-out of the resource guarantees and is gated in the CLI.
*/
struct caps
{
  int enumeration = 20;      /* max arity for 2^n point sweeps */
  int pss_length = 24;       /* max dimension of a partial-sum generator */
  int cover_targets = 10;    /* max |Y| in a cover search */
  int cover_k = 8;           /* max cover dimension searched */
  int lc_arity = 6;          /* max arity for the family-C support search */
  int nogood_arity = 12;     /* max arity for materializing system (no-good rows) */
  int labs_expand = 20;      /* max N for the full polynomial expansion */
  int labs_indicator = 8;    /* max N for the indicator-only model */
  int labs_exhaustive = 28;  /* max N for exhaustive sequence search */
  int table_arity = 24;      /* max arity for materialized truth tables */
};

inline void require_cap( bool ok, const std::string& what )
{
  if ( !ok )
  {
    throw cap_error( what );
  }
}

inline void require_input( bool ok, const std::string& what )
{
  if ( !ok )
  {
    throw input_error( what );
  }
}

} /* namespace pblin */
