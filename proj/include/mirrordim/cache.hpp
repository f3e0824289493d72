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

#ifndef MIRRORDIM_CACHE_HPP
#define MIRRORDIM_CACHE_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

namespace mirrordim {

// File-backed JSON result cache. Keys carry a schema stamp, so stale
// entries from older layouts are ignored rather than misread.
class Cache {
   public:
    static constexpr int schema = 1;

    Cache() = default;

    static Cache disabled() { return Cache(); }

    static Cache at(std::filesystem::path dir) {
        Cache c;
        c.dir_ = std::move(dir);
        c.enabled_ = true;
        std::filesystem::create_directories(c.dir_);
        return c;
    }

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<nlohmann::json> load(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        const auto path = dir_ / (key + ".json");
        std::ifstream in(path);
        if (!in) return std::nullopt;
        nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded()) return std::nullopt;
        if (!j.is_object() || !j.contains("schema") || j["schema"] != schema) return std::nullopt;
        return j;
    }

    void store(const std::string& key, const nlohmann::json& value) const {
        if (!enabled_) return;
        const auto path = dir_ / (key + ".json");
        const auto tmp = dir_ / (key + ".json.tmp");
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << value.dump(2) << '\n';
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
    }

   private:
    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace mirrordim

#endif
