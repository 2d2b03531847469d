#pragma once

// Named polynomial rings over the rationals, and the monomial orders the
// rest of the library computes under: lex, graded reverse lex, and block
// (elimination) orders built from two grevlex blocks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/errors.hpp"
#include "pfaff/monomial.hpp"

namespace pfaff {

enum class OrderKind { lex, grevlex, block };

class MonomialOrder {
  public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, {}); }

    // Variables with mask[i] != 0 form the first (eliminated) block; both
    // blocks are compared grevlex.
    static MonomialOrder block(std::vector<char> first_block_mask) {
        return MonomialOrder(OrderKind::block, std::move(first_block_mask));
    }

    // First block = the first k ring variables.
    static MonomialOrder block_first(std::size_t arity, std::size_t k) {
        std::vector<char> mask(arity, 0);
        for (std::size_t i = 0; i < k && i < arity; ++i)
            mask[i] = 1;
        return MonomialOrder(OrderKind::block, std::move(mask));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<char>& mask() const { return mask_; }

    // +1 if a comes after b in descending term lists (a > b), -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::lex:
                return cmp_lex(a, b);
            case OrderKind::grevlex:
                return cmp_grevlex(a.exps, b.exps, nullptr, false);
            case OrderKind::block: {
                int c = cmp_grevlex(a.exps, b.exps, &mask_, true);
                if (c != 0)
                    return c;
                return cmp_grevlex(a.exps, b.exps, &mask_, false);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && mask_ == o.mask_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
    bool operator<(const MonomialOrder& o) const {
        if (kind_ != o.kind_)
            return kind_ < o.kind_;
        return mask_ < o.mask_;
    }

  private:
    MonomialOrder(OrderKind kind, std::vector<char> mask)
        : kind_(kind), mask_(std::move(mask)) {}

    static int cmp_lex(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps.size(); ++i) {
            if (a.exps[i] != b.exps[i])
                return a.exps[i] > b.exps[i] ? 1 : -1;
        }
        return 0;
    }

    // grevlex restricted to the positions selected by (mask, in_mask);
    // a null mask selects everything. Higher degree wins; on ties the
    // rightmost differing exponent decides, smaller being greater.
    static int cmp_grevlex(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           const std::vector<char>* mask, bool in_mask) {
        std::int64_t da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (mask && (((*mask)[i] != 0) != in_mask))
                continue;
            da += a[i];
            db += b[i];
        }
        if (da != db)
            return da > db ? 1 : -1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (mask && (((*mask)[i] != 0) != in_mask))
                continue;
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_;
    std::vector<char> mask_; // block orders only; size = arity
};

class Ring {
  public:
    Ring(std::vector<std::string> variables,
         MonomialOrder default_order = MonomialOrder::grevlex(),
         std::uint32_t max_exponent = 1u << 16)
        : data_(std::make_shared<const Data>(make_data(
              std::move(variables), std::move(default_order), max_exponent))) {}

    std::size_t arity() const { return data_->vars.size(); }
    const std::vector<std::string>& variables() const { return data_->vars; }
    const std::string& variable(std::size_t i) const { return data_->vars.at(i); }
    const MonomialOrder& default_order() const { return data_->order; }
    std::uint32_t max_exponent() const { return data_->max_exponent; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = data_->index.find(std::string(name));
        if (it == data_->index.end())
            return std::nullopt;
        return it->second;
    }

    bool has_variable(std::string_view name) const { return index_of(name).has_value(); }

    // Structural equality: same variable names in the same positions.
    bool operator==(const Ring& o) const {
        return data_ == o.data_ || data_->vars == o.data_->vars;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    // New ring with one fresh variable appended; the name is `base`
    // suffixed with underscores until it is unused.
    Ring extended(const std::string& base) const {
        std::string name = base;
        while (has_variable(name))
            name += "_";
        auto vars = data_->vars;
        vars.push_back(name);
        return Ring(std::move(vars), MonomialOrder::grevlex(), data_->max_exponent);
    }

  private:
    struct Data {
        std::vector<std::string> vars;
        MonomialOrder order;
        std::uint32_t max_exponent;
        std::map<std::string, std::size_t> index;
    };

    static Data make_data(std::vector<std::string> vars, MonomialOrder order,
                          std::uint32_t max_exponent) {
        if (vars.empty())
            throw Error("ring needs at least one variable");
        Data d{std::move(vars), std::move(order), max_exponent, {}};
        for (std::size_t i = 0; i < d.vars.size(); ++i) {
            if (d.vars[i].empty())
                throw Error("empty variable name");
            if (!d.index.emplace(d.vars[i], i).second)
                throw Error("duplicate ring variable '" + d.vars[i] + "'");
        }
        return d;
    }

    std::shared_ptr<const Data> data_;
};

} // namespace pfaff
