// Copyright 2026 The qhomog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qhomog/error.hpp"

namespace qhomog {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidState:
            return "invalid-state";
        case ErrorKind::Dimension:
            return "dimension";
        case ErrorKind::Capacity:
            return "capacity";
        case ErrorKind::Index:
            return "index";
        case ErrorKind::Gate:
            return "gate";
        case ErrorKind::Domain:
            return "domain";
        case ErrorKind::Configuration:
            return "configuration";
        case ErrorKind::Usage:
            return "usage";
        case ErrorKind::Io:
            return "io";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {
}

}  // namespace qhomog
