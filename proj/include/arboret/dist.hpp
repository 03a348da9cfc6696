#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "arboret/errors.hpp"
#include "arboret/rng.hpp"

namespace arboret {

/// Distribution of the number of children drawn at each node of a simply
/// generated tree.  Finite support over nonnegative counts; mass at zero
/// must be positive (otherwise generation never terminates).
class ChildrenDistribution {
public:
    ChildrenDistribution(std::vector<int> support, std::vector<double> mass)
        : support_(std::move(support)), mass_(std::move(mass)) {
        if (support_.empty() || support_.size() != mass_.size())
            throw std::invalid_argument("support and mass sizes must match");
        std::vector<std::size_t> idx(support_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return support_[a] < support_[b]; });
        std::vector<int> s;
        std::vector<double> m;
        for (std::size_t i : idx) {
            if (support_[i] < 0)
                throw std::invalid_argument("child counts must be nonnegative");
            if (!s.empty() && s.back() == support_[i])
                throw std::invalid_argument("duplicate support value");
            if (!(mass_[i] > 0.0))
                throw std::invalid_argument("mass values must be positive");
            s.push_back(support_[i]);
            m.push_back(mass_[i]);
        }
        support_ = std::move(s);
        mass_ = std::move(m);
        double total = 0.0;
        for (double p : mass_) total += p;
        if (std::fabs(total - 1.0) > 1e-12)
            throw std::invalid_argument("mass must sum to 1");
        if (support_[0] != 0)
            throw std::invalid_argument("mass at zero children must be positive");
        cdf_.resize(mass_.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < mass_.size(); ++i) {
            acc += mass_[i];
            cdf_[i] = acc;
        }
        cdf_.back() = 1.0;
    }

    const std::vector<int>& support() const { return support_; }
    const std::vector<double>& mass() const { return mass_; }

    double p0() const { return mass_[0]; }
    int max_support() const { return support_.back(); }

    double pmf(int k) const {
        auto it = std::lower_bound(support_.begin(), support_.end(), k);
        if (it == support_.end() || *it != k) return 0.0;
        return mass_[it - support_.begin()];
    }

    /// Mean child count.
    double mean() const {
        double m = 0.0;
        for (std::size_t i = 0; i < support_.size(); ++i)
            m += support_[i] * mass_[i];
        return m;
    }

    /// Shannon entropy in bits.
    double entropy_bits() const {
        double h = 0.0;
        for (double p : mass_) h -= p * std::log2(p);
        return h;
    }

    bool subcritical() const { return mean() < 1.0; }

    int sample(Rng& rng) const {
        double u = rng.next_double();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        if (it == cdf_.end()) --it;
        return support_[it - cdf_.begin()];
    }

    /// Distribution conditioned on the child count being at most `limit`,
    /// renormalized.  Throws when no support value survives.
    ChildrenDistribution truncated(int limit) const {
        std::vector<int> s;
        std::vector<double> m;
        double total = 0.0;
        for (std::size_t i = 0; i < support_.size(); ++i)
            if (support_[i] <= limit) {
                s.push_back(support_[i]);
                m.push_back(mass_[i]);
                total += mass_[i];
            }
        if (s.empty() || total <= 0.0)
            throw std::invalid_argument("truncated distribution has zero mass");
        for (double& p : m) p /= total;
        return ChildrenDistribution(std::move(s), std::move(m));
    }

private:
    std::vector<int> support_;
    std::vector<double> mass_;
    std::vector<double> cdf_;
};

/// Parses the compact inline form "{0:.5,1:.25,2:.25}".
inline ChildrenDistribution parse_dist_inline(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> ParseError { return ParseError(msg, i); };
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '{') throw fail("expected '{'");
    ++i;
    std::vector<int> support;
    std::vector<double> mass;
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw fail("expected a child count");
        int k = std::stoi(text.substr(start, i - start));
        skip_ws();
        if (i >= text.size() || text[i] != ':') throw fail("expected ':'");
        ++i;
        skip_ws();
        start = i;
        while (i < text.size() &&
               ((text[i] >= '0' && text[i] <= '9') || text[i] == '.' ||
                text[i] == 'e' || text[i] == 'E' || text[i] == '+' || text[i] == '-'))
            ++i;
        if (i == start) throw fail("expected a probability");
        double p = std::stod(text.substr(start, i - start));
        support.push_back(k);
        mass.push_back(p);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == '}') {
            ++i;
            break;
        }
        throw fail("expected ',' or '}'");
    }
    skip_ws();
    if (i != text.size()) throw fail("trailing characters");
    try {
        return ChildrenDistribution(std::move(support), std::move(mass));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace arboret
