/*
 Copyright 2026 The quadctl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef QUADCTL_ERRORS_HPP
#define QUADCTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadctl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix dimensions do not fit the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied value violates a documented precondition.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// A quadratic form required to be positive definite is not.
class DefinitenessError : public Error {
public:
    DefinitenessError(const std::string& what, double eigenvalue)
        : Error(what), eigenvalue_(eigenvalue) {}

    /// Smallest eigenvalue of the offending matrix.
    double eigenvalue() const noexcept { return eigenvalue_; }

private:
    double eigenvalue_;
};

/// A numerical routine could not reach its accuracy target.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace quadctl

#endif  // QUADCTL_ERRORS_HPP
