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

#include <string>

namespace pblin::detail
{

inline std::string strip( const std::string& s )
{
  const auto begin = s.find_first_not_of( " \t\r\n" );
  if ( begin == std::string::npos )
  {
    return {};
  }
  const auto end = s.find_last_not_of( " \t\r\n" );
  return s.substr( begin, end - begin + 1 );
}

} /* namespace pblin::detail */
