// Copyright 2026 The dfsbell Authors
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

#ifndef DFSBELL_SRC_JSON_UTIL_HPP
#define DFSBELL_SRC_JSON_UTIL_HPP

#include <string>

#include "json.hpp"
#include "dfsbell/errors.hpp"

namespace dfsbell {

/// Parsed JSON plus its raw text, so errors can point at a line.
class JsonDoc {
   public:
    JsonDoc(const std::string &text, std::string source) : text_(text), source_(std::move(source)) {
        try {
            root_ = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw ConfigError(source_ + ":" + std::to_string(line_of(e.byte)) + ": invalid JSON: " + e.what());
        }
    }

    const nlohmann::json &root() const { return root_; }

    /// "source:line: " for the first line mentioning "key", or line 1.
    std::string anchor(const std::string &key) const {
        size_t pos = text_.find("\"" + key + "\"");
        size_t line = pos == std::string::npos ? 1 : line_of(pos + 1);
        return source_ + ":" + std::to_string(line) + ": ";
    }

    /// A missing key is reported against `context` (the enclosing key), or line 1.
    const nlohmann::json &require(const nlohmann::json &obj, const std::string &key,
                                  const std::string &context = "") const {
        if (!obj.is_object() || !obj.contains(key)) {
            throw ConfigError((context.empty() ? source_ + ":1: " : anchor(context)) + "missing required key '" + key +
                              "'");
        }
        return obj.at(key);
    }

    template <typename T>
    T get(const nlohmann::json &obj, const std::string &key, const std::string &context = "") const {
        const auto &v = require(obj, key, context);
        try {
            return v.get<T>();
        } catch (const nlohmann::json::exception &) {
            throw ConfigError(anchor(key) + "key '" + key + "' has the wrong type");
        }
    }

    void require_object(const nlohmann::json &v, const std::string &what) const {
        if (!v.is_object()) {
            throw ConfigError(anchor(what) + "'" + what + "' must be a JSON object");
        }
    }

    void require_array(const nlohmann::json &v, const std::string &what) const {
        if (!v.is_array()) {
            throw ConfigError(anchor(what) + "'" + what + "' must be a JSON array");
        }
    }

   private:
    size_t line_of(size_t byte) const {
        size_t line = 1;
        for (size_t k = 0; k + 1 < byte && k < text_.size(); k++) {
            line += text_[k] == '\n';
        }
        return line;
    }

    std::string text_;
    std::string source_;
    nlohmann::json root_;
};

}  // namespace dfsbell

#endif
