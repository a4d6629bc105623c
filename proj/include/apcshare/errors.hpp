// Copyright 2026 The apcshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace apcshare {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A file could not be opened or lacks the structure required to read it at all.
class FileUnreadable : public Error {
public:
    using Error::Error;
};

/// Two corpus records share the same publication id. Always fatal.
class DuplicateId : public Error {
public:
    using Error::Error;
};

/// A list file yielded zero usable rows.
class EmptyList : public Error {
public:
    using Error::Error;
};

/// A record filter matched nothing.
class EmptySelection : public Error {
public:
    using Error::Error;
};

/// A report was requested over zero rows.
class EmptyReport : public Error {
public:
    using Error::Error;
};

/// A requested cost model is not present in the table being queried.
class ModelMissing : public Error {
public:
    using Error::Error;
};

/// No participating institution can carry the cost under the requested model.
class NoEligiblePayer : public Error {
public:
    using Error::Error;
};

/// An ISSN candidate has the wrong shape (length or characters).
class MalformedIssn : public Error {
public:
    using Error::Error;
};

/// An ISSN candidate is well-formed but fails the mod-11 check digit.
class ChecksumFailure : public Error {
public:
    using Error::Error;
};

}  // namespace apcshare
