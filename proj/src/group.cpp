#include "gfrob/group.hpp"

#include <algorithm>
#include <cctype>

#include "gfrob/errors.hpp"

namespace gfrob {

GroupModel GroupModel::integers() {
    GroupModel m;
    m.kind_ = Kind::Integers;
    m.width_ = 1;
    return m;
}

GroupModel GroupModel::cyclic(int64_t n) {
    if (n < 1)
        throw Error("Z/n needs n >= 1");
    GroupModel m;
    m.kind_ = Kind::Cyclic;
    m.n_ = n;
    m.width_ = 1;
    return m;
}

GroupModel GroupModel::bool_vec(int n) {
    if (n < 1)
        throw Error("Z2^n needs n >= 1");
    GroupModel m;
    m.kind_ = Kind::BoolVec;
    m.n_ = n;
    m.width_ = n;
    return m;
}

GroupModel GroupModel::product(std::vector<GroupModel> parts) {
    if (parts.empty())
        throw Error("product of no groups");
    GroupModel m;
    m.kind_ = Kind::Product;
    m.width_ = 0;
    for (const GroupModel& p : parts)
        m.width_ += p.width_;
    m.parts_ = std::move(parts);
    return m;
}

GroupModel GroupModel::table(std::vector<std::string> names, std::vector<std::vector<int>> cayley) {
    const size_t k = names.size();
    if (k == 0)
        throw InvalidTable("table with no elements");
    if (cayley.size() != k)
        throw InvalidTable("table has " + std::to_string(cayley.size()) + " rows, expected " + std::to_string(k));
    for (size_t g = 0; g < k; ++g) {
        if (cayley[g].size() != k)
            throw InvalidTable("row for " + names[g] + " has " + std::to_string(cayley[g].size()) +
                               " entries, expected " + std::to_string(k));
        for (int v : cayley[g])
            if (v < 0 || static_cast<size_t>(v) >= k)
                throw InvalidTable("row for " + names[g] + " references an element out of range");
    }
    // Latin square: every row and column is a permutation.
    for (size_t g = 0; g < k; ++g) {
        std::vector<bool> row_seen(k, false), col_seen(k, false);
        for (size_t h = 0; h < k; ++h) {
            if (row_seen[cayley[g][h]])
                throw InvalidTable("row for " + names[g] + " repeats " + names[cayley[g][h]]);
            row_seen[cayley[g][h]] = true;
            if (col_seen[cayley[h][g]])
                throw InvalidTable("column for " + names[g] + " repeats " + names[cayley[h][g]]);
            col_seen[cayley[h][g]] = true;
        }
    }
    int identity = -1;
    for (size_t e = 0; e < k; ++e) {
        bool ok = true;
        for (size_t g = 0; g < k; ++g)
            ok = ok && cayley[e][g] == static_cast<int>(g) && cayley[g][e] == static_cast<int>(g);
        if (ok) {
            identity = static_cast<int>(e);
            break;
        }
    }
    if (identity < 0)
        throw InvalidTable("table has no two-sided identity");
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            for (size_t c = 0; c < k; ++c)
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
                    throw InvalidTable("not associative at (" + names[a] + "," + names[b] + "," + names[c] + ")");
    std::vector<int> inverse(k, -1);
    for (size_t g = 0; g < k; ++g) {
        for (size_t h = 0; h < k; ++h)
            if (cayley[g][h] == identity && cayley[h][g] == identity)
                inverse[g] = static_cast<int>(h);
        if (inverse[g] < 0)
            throw InvalidTable(names[g] + " has no two-sided inverse");
    }
    GroupModel m;
    m.kind_ = Kind::Table;
    m.width_ = 1;
    m.names_ = std::move(names);
    m.cayley_ = std::move(cayley);
    m.inverse_ = std::move(inverse);
    m.identity_index_ = identity;
    return m;
}

void GroupModel::check(const GroupValue& a) const {
    if (!contains(a))
        throw ElementOutOfModel("'" + [&] {
            std::string s;
            for (int64_t v : a.enc)
                s += (s.empty() ? "" : ",") + std::to_string(v);
            return s;
        }() + "' is not an element of " + describe());
}

bool GroupModel::contains(const GroupValue& a) const {
    if (a.enc.size() != static_cast<size_t>(width_))
        return false;
    switch (kind_) {
    case Kind::Integers:
        return true;
    case Kind::Cyclic:
        return a.enc[0] >= 0 && a.enc[0] < n_;
    case Kind::BoolVec:
        return std::all_of(a.enc.begin(), a.enc.end(), [](int64_t v) { return v == 0 || v == 1; });
    case Kind::Product: {
        size_t off = 0;
        for (const GroupModel& p : parts_) {
            GroupValue part;
            part.enc.assign(a.enc.begin() + off, a.enc.begin() + off + p.width_);
            if (!p.contains(part))
                return false;
            off += p.width_;
        }
        return true;
    }
    case Kind::Table:
        return a.enc[0] >= 0 && a.enc[0] < static_cast<int64_t>(names_.size());
    }
    return false;
}

GroupValue GroupModel::identity() const {
    GroupValue e;
    e.enc.assign(width_, 0);
    if (kind_ == Kind::Table)
        e.enc[0] = identity_index_;
    if (kind_ == Kind::Product) {
        size_t off = 0;
        for (const GroupModel& p : parts_) {
            GroupValue pe = p.identity();
            std::copy(pe.enc.begin(), pe.enc.end(), e.enc.begin() + off);
            off += p.width_;
        }
    }
    return e;
}

GroupValue GroupModel::compose(const GroupValue& a, const GroupValue& b) const {
    check(a);
    check(b);
    GroupValue r;
    r.enc.resize(width_);
    switch (kind_) {
    case Kind::Integers:
        r.enc[0] = a.enc[0] + b.enc[0];
        break;
    case Kind::Cyclic:
        r.enc[0] = (a.enc[0] + b.enc[0]) % n_;
        break;
    case Kind::BoolVec:
        for (int i = 0; i < width_; ++i)
            r.enc[i] = a.enc[i] ^ b.enc[i];
        break;
    case Kind::Product: {
        size_t off = 0;
        for (const GroupModel& p : parts_) {
            GroupValue pa, pb;
            pa.enc.assign(a.enc.begin() + off, a.enc.begin() + off + p.width_);
            pb.enc.assign(b.enc.begin() + off, b.enc.begin() + off + p.width_);
            GroupValue pr = p.compose(pa, pb);
            std::copy(pr.enc.begin(), pr.enc.end(), r.enc.begin() + off);
            off += p.width_;
        }
        break;
    }
    case Kind::Table:
        r.enc[0] = cayley_[a.enc[0]][b.enc[0]];
        break;
    }
    return r;
}

GroupValue GroupModel::invert(const GroupValue& a) const {
    check(a);
    GroupValue r;
    r.enc.resize(width_);
    switch (kind_) {
    case Kind::Integers:
        r.enc[0] = -a.enc[0];
        break;
    case Kind::Cyclic:
        r.enc[0] = (n_ - a.enc[0]) % n_;
        break;
    case Kind::BoolVec:
        r.enc = a.enc; // every element is its own inverse
        break;
    case Kind::Product: {
        size_t off = 0;
        for (const GroupModel& p : parts_) {
            GroupValue pa;
            pa.enc.assign(a.enc.begin() + off, a.enc.begin() + off + p.width_);
            GroupValue pr = p.invert(pa);
            std::copy(pr.enc.begin(), pr.enc.end(), r.enc.begin() + off);
            off += p.width_;
        }
        break;
    }
    case Kind::Table:
        r.enc[0] = inverse_[a.enc[0]];
        break;
    }
    return r;
}

bool GroupModel::finite() const {
    switch (kind_) {
    case Kind::Integers:
        return false;
    case Kind::Product:
        return std::all_of(parts_.begin(), parts_.end(), [](const GroupModel& p) { return p.finite(); });
    default:
        return true;
    }
}

size_t GroupModel::order() const {
    switch (kind_) {
    case Kind::Integers:
        throw Error("the integers are infinite");
    case Kind::Cyclic:
        return static_cast<size_t>(n_);
    case Kind::BoolVec:
        return size_t{1} << n_;
    case Kind::Product: {
        size_t total = 1;
        for (const GroupModel& p : parts_)
            total *= p.order();
        return total;
    }
    case Kind::Table:
        return names_.size();
    }
    return 0;
}

std::vector<GroupValue> GroupModel::elements() const {
    if (!finite())
        throw Error("cannot enumerate an infinite group");
    std::vector<GroupValue> out;
    switch (kind_) {
    case Kind::Integers:
        break;
    case Kind::Cyclic:
    case Kind::Table:
        for (size_t i = 0; i < order(); ++i)
            out.push_back(GroupValue{{static_cast<int64_t>(i)}});
        break;
    case Kind::BoolVec:
        for (size_t mask = 0; mask < order(); ++mask) {
            GroupValue v;
            for (int i = 0; i < width_; ++i)
                v.enc.push_back((mask >> i) & 1);
            out.push_back(std::move(v));
        }
        break;
    case Kind::Product: {
        out.push_back(GroupValue{});
        for (const GroupModel& p : parts_) {
            std::vector<GroupValue> next;
            for (const GroupValue& prefix : out)
                for (const GroupValue& pe : p.elements()) {
                    GroupValue v = prefix;
                    v.enc.insert(v.enc.end(), pe.enc.begin(), pe.enc.end());
                    next.push_back(std::move(v));
                }
            out = std::move(next);
        }
        break;
    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string GroupModel::describe() const {
    switch (kind_) {
    case Kind::Integers:
        return "Z";
    case Kind::Cyclic:
        return "Z/" + std::to_string(n_);
    case Kind::BoolVec:
        return "Z2^" + std::to_string(n_);
    case Kind::Product: {
        std::string s = "product(";
        for (size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + parts_[i].describe();
        return s + ")";
    }
    case Kind::Table: {
        std::string s = "table{";
        for (size_t i = 0; i < names_.size(); ++i)
            s += (i ? " " : "") + names_[i];
        for (const auto& row : cayley_) {
            s += ";";
            for (size_t i = 0; i < row.size(); ++i)
                s += (i ? " " : " ") + names_[row[i]];
        }
        return s + "}";
    }
    }
    return "";
}

std::string GroupModel::render_element(const GroupValue& a) const {
    check(a);
    switch (kind_) {
    case Kind::Integers:
    case Kind::Cyclic:
        return std::to_string(a.enc[0]);
    case Kind::BoolVec: {
        std::string s = "(";
        for (int i = 0; i < width_; ++i)
            s += (i ? "," : "") + std::to_string(a.enc[i]);
        return s + ")";
    }
    case Kind::Product: {
        std::string s = "(";
        size_t off = 0;
        for (size_t i = 0; i < parts_.size(); ++i) {
            GroupValue part;
            part.enc.assign(a.enc.begin() + off, a.enc.begin() + off + parts_[i].width_);
            s += (i ? "," : "") + parts_[i].render_element(part);
            off += parts_[i].width_;
        }
        return s + ")";
    }
    case Kind::Table:
        return names_[a.enc[0]];
    }
    return "";
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in '" + std::string(text) + "'");
    }
    bool eat_keyword(std::string_view kw) {
        skip_ws();
        if (text.substr(pos, kw.size()) == kw) {
            pos += kw.size();
            return true;
        }
        return false;
    }
    int64_t integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected an integer in '" + std::string(text) + "'");
        return std::stoll(std::string(text.substr(start, pos - start)));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '-' ||
                text[pos] == '+' || text[pos] == '*' || text[pos] == '.')) {
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected a name in '" + std::string(text) + "'");
        return std::string(text.substr(start, pos - start));
    }
    bool at(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool done() {
        skip_ws();
        return pos == text.size();
    }
};

GroupModel parse_model(Cursor& cur);

GroupModel parse_table(Cursor& cur) {
    cur.expect('{');
    std::vector<std::string> names;
    while (!cur.at(';') && !cur.at('}'))
        names.push_back(cur.ident());
    std::vector<std::vector<int>> cayley;
    auto index_of = [&](const std::string& name) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw ParseError("unknown table element '" + name + "'");
        return static_cast<int>(it - names.begin());
    };
    while (cur.eat(';')) {
        std::vector<int> row;
        while (!cur.at(';') && !cur.at('}'))
            row.push_back(index_of(cur.ident()));
        cayley.push_back(std::move(row));
    }
    cur.expect('}');
    return GroupModel::table(std::move(names), std::move(cayley));
}

GroupModel parse_model(Cursor& cur) {
    if (cur.eat_keyword("product")) {
        cur.expect('(');
        std::vector<GroupModel> parts;
        parts.push_back(parse_model(cur));
        while (cur.eat(','))
            parts.push_back(parse_model(cur));
        cur.expect(')');
        return GroupModel::product(std::move(parts));
    }
    if (cur.eat_keyword("table"))
        return parse_table(cur);
    if (cur.eat_keyword("Z2^"))
        return GroupModel::bool_vec(static_cast<int>(cur.integer()));
    if (cur.eat_keyword("Z/"))
        return GroupModel::cyclic(cur.integer());
    if (cur.eat_keyword("Z"))
        return GroupModel::integers();
    throw ParseError("expected a group description in '" + std::string(cur.text) + "'");
}

GroupValue parse_element_rec(const GroupModel& m, Cursor& cur) {
    GroupValue v;
    switch (m.kind()) {
    case GroupModel::Kind::Integers:
        v.enc.push_back(cur.integer());
        break;
    case GroupModel::Kind::Cyclic: {
        int64_t raw = cur.integer();
        int64_t n = static_cast<int64_t>(m.order());
        v.enc.push_back(((raw % n) + n) % n);
        break;
    }
    case GroupModel::Kind::BoolVec: {
        cur.expect('(');
        for (int i = 0; i < m.flat_width(); ++i) {
            if (i)
                cur.expect(',');
            int64_t bit = cur.integer();
            if (bit != 0 && bit != 1)
                throw ParseError("Z2^n components must be 0 or 1");
            v.enc.push_back(bit);
        }
        cur.expect(')');
        break;
    }
    case GroupModel::Kind::Product: {
        cur.expect('(');
        for (size_t i = 0; i < m.parts().size(); ++i) {
            if (i)
                cur.expect(',');
            GroupValue part = parse_element_rec(m.parts()[i], cur);
            v.enc.insert(v.enc.end(), part.enc.begin(), part.enc.end());
        }
        cur.expect(')');
        break;
    }
    case GroupModel::Kind::Table: {
        std::string name = cur.ident();
        GroupValue probe;
        for (size_t i = 0; i < m.order(); ++i) {
            probe.enc = {static_cast<int64_t>(i)};
            if (m.render_element(probe) == name)
                return probe;
        }
        throw ParseError("unknown table element '" + name + "'");
    }
    }
    return v;
}

} // namespace

GroupModel GroupModel::parse(std::string_view text) {
    Cursor cur{text};
    GroupModel m = parse_model(cur);
    if (!cur.done())
        throw ParseError("trailing input after group description '" + std::string(text) + "'");
    return m;
}

GroupValue GroupModel::parse_element(std::string_view text) const {
    Cursor cur{text};
    GroupValue v = parse_element_rec(*this, cur);
    if (!cur.done())
        throw ParseError("trailing input after element '" + std::string(text) + "'");
    check(v);
    return v;
}

} // namespace gfrob
