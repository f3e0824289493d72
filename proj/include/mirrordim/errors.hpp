/*
   Copyright 2026 The mirrordim authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MIRRORDIM_ERRORS_HPP
#define MIRRORDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mirrordim {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// A configurable work cap was hit (group enumeration, basis size,
// truncation degree, ...). Maps to CLI exit code 3.
class ResourceExhausted : public Error {
   public:
    using Error::Error;
};

class NotZeroDimensional : public Error {
   public:
    using Error::Error;
};

}  // namespace mirrordim

#endif
