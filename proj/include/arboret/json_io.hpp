#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "arboret/dist.hpp"
#include "arboret/entropy.hpp"
#include "arboret/errors.hpp"
#include "arboret/ordered_tree.hpp"

namespace arboret {

using nlohmann::json;

inline json dist_to_json(const ChildrenDistribution& d) {
    return json{{"support", d.support()}, {"mass", d.mass()}};
}

inline ChildrenDistribution dist_from_json(const json& j) {
    if (!j.is_object() || !j.contains("support") || !j.contains("mass"))
        throw ParseError("distribution JSON needs \"support\" and \"mass\" arrays", 0);
    try {
        auto support = j.at("support").get<std::vector<int>>();
        auto mass = j.at("mass").get<std::vector<double>>();
        return ChildrenDistribution(std::move(support), std::move(mass));
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

inline json tree_to_json(const OrderedTree& t) {
    std::vector<std::vector<int>> kids(t.n());
    for (int v = 0; v < t.n(); ++v) kids[v] = t.children(v);
    return json{{"n", t.n()}, {"children", kids}};
}

inline OrderedTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("children"))
        throw ParseError("tree JSON needs \"n\" and \"children\"", 0);
    try {
        int n = j.at("n").get<int>();
        auto kids = j.at("children").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(kids.size()) != n)
            throw ParseError("children list length disagrees with n", 0);
        return OrderedTree::from_children(kids, 0);
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

inline json entropy_report_to_json(const EntropyReport& r) {
    json j;
    j["model"] = r.model;
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    if (r.exact) j["exact"] = *r.exact;
    if (r.bound) j[bound_kind_name(r.bound_kind)] = *r.bound;
    for (const auto& [k, v] : r.extras) j[k] = v;
    return j;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

inline std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

inline void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

/// --dist accepts either the inline "{0:.5,2:.5}" shorthand or a path to a
/// JSON file with "support"/"mass" arrays.
inline ChildrenDistribution load_dist_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        if (arg.find('"') == std::string::npos) return parse_dist_inline(arg);
        try {
            return dist_from_json(json::parse(arg));
        } catch (const json::parse_error& e) {
            throw ParseError(e.what(), e.byte);
        }
    }
    try {
        return dist_from_json(json::parse(read_text_file(arg)));
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

}  // namespace arboret
