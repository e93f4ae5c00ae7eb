#include "arqkit/quiver.hpp"
#include "arqkit/diagrams.hpp"
#include "arqkit/error.hpp"

#include <cctype>
#include <queue>
#include <sstream>

namespace arqkit {

int Quiver::add_vertex(const std::string& id, const std::string& label)
{
    if (id.empty())
        throw Error("empty vertex id");
    if (vertex_index_.count(id))
        throw Error("duplicate vertex id '" + id + "'");
    int idx = static_cast<int>(vertices_.size());
    vertices_.push_back({id, label.empty() ? id : label});
    vertex_index_.emplace(id, idx);
    return idx;
}

int Quiver::add_arrow(const std::string& id, const std::string& src, const std::string& dst,
                      const std::string& label)
{
    if (arrow_index_.count(id))
        throw Error("duplicate arrow id '" + id + "'");
    auto s = find_vertex(src);
    if (!s)
        throw Error("unknown vertex '" + src + "'");
    auto d = find_vertex(dst);
    if (!d)
        throw Error("unknown vertex '" + dst + "'");
    int idx = static_cast<int>(arrows_.size());
    arrows_.push_back({id, *s, *d, label.empty() ? id : label});
    arrow_index_.emplace(id, idx);
    return idx;
}

void Quiver::add_relation(Relation r)
{
    for (const auto& t : r.terms) {
        if (t.path.empty())
            throw Error("empty relation path");
        for (std::size_t i = 0; i + 1 < t.path.size(); ++i)
            if (arrows_.at(t.path[i]).src != arrows_.at(t.path[i + 1]).dst)
                throw Error("non-composable relation path in '" + r.text + "'");
    }
    relations_.push_back(std::move(r));
}

std::optional<int> Quiver::find_vertex(std::string_view id) const
{
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(std::string_view id) const
{
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end())
        return std::nullopt;
    return it->second;
}

int Quiver::vertex_index(std::string_view id) const
{
    auto v = find_vertex(id);
    if (!v)
        throw Error("unknown vertex '" + std::string(id) + "'");
    return *v;
}

bool Quiver::has_loop() const
{
    for (const auto& a : arrows_)
        if (a.src == a.dst)
            return true;
    return false;
}

std::vector<int> Quiver::topological_order() const
{
    std::size_t n = vertices_.size();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const auto& a : arrows_) {
        ++indeg[a.dst];
        out[a.src].push_back(a.dst);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.push(static_cast<int>(v));
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0)
                ready.push(w);
    }
    if (order.size() != n)
        throw Error("quiver has an oriented cycle");
    return order;
}

bool Quiver::acyclic() const
{
    try {
        topological_order();
        return true;
    } catch (const Error&) {
        return false;
    }
}

IntMatrix Quiver::path_counts() const
{
    auto order = topological_order();
    std::size_t n = vertices_.size();
    IntMatrix p(n, n);
    std::vector<std::vector<int>> out(n);
    for (const auto& a : arrows_)
        out[a.src].push_back(a.dst);
    // Process sinks first so that counts from successors are final.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = *it;
        p(i, i) = 1;
        for (int k : out[i])
            for (std::size_t j = 0; j < n; ++j)
                p(i, j) += p(k, j);
    }
    return p;
}

IntMatrix Quiver::arrow_counts() const
{
    IntMatrix m(vertices_.size(), vertices_.size());
    for (const auto& a : arrows_)
        m(a.src, a.dst) += 1;
    return m;
}

UndirectedGraph Quiver::underlying_graph() const
{
    UndirectedGraph g;
    for (const auto& v : vertices_)
        g.add_vertex(v.id);
    for (const auto& a : arrows_)
        g.add_edge(a.src, a.dst, 1);
    return g;
}

Quiver Quiver::opposite() const
{
    Quiver q;
    for (const auto& v : vertices_)
        q.add_vertex(v.id, v.label);
    for (const auto& a : arrows_)
        q.add_arrow(a.id, vertices_[a.dst].id, vertices_[a.src].id, a.label);
    return q;
}

std::string Quiver::to_string() const
{
    std::ostringstream out;
    out << "vertices";
    for (const auto& v : vertices_) {
        out << ' ' << v.id;
        if (v.label != v.id)
            out << ':' << v.label;
    }
    out << "\narrows";
    for (const auto& a : arrows_) {
        out << ' ' << a.id << ':' << vertices_[a.src].id << "->" << vertices_[a.dst].id;
        if (a.label != a.id)
            out << ':' << a.label;
    }
    out << '\n';
    if (!relations_.empty()) {
        out << "relations";
        for (const auto& r : relations_)
            out << ' ' << r.text;
        out << '\n';
    }
    return out.str();
}

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> tokens;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance();
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
        } else if (c == ';') {
            tokens.push_back({";", line, col});
            advance();
        } else {
            Token t{{}, line, col};
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ';' &&
                   text[i] != '#') {
                t.text += text[i];
                advance();
            }
            tokens.push_back(std::move(t));
        }
    }
    return tokens;
}

Quiver::Relation parse_relation(const Quiver& q, const Token& tok)
{
    Quiver::Relation rel;
    rel.text = tok.text;
    const std::string& s = tok.text;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg, std::size_t at) {
        throw ParseError(msg, tok.line, tok.column + static_cast<int>(at));
    };
    while (i < s.size()) {
        Quiver::Term term{1, {}};
        std::size_t term_start = i;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-')
                term.coeff = -1;
            ++i;
        } else if (!rel.terms.empty()) {
            fail("expected '+' or '-'", i);
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j < s.size() && s[j] == '*' && j > i) {
            term.coeff *= Int(s.substr(i, j - i));
            i = j + 1;
        }
        std::size_t end = i;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string path = s.substr(i, end - i);
        if (path.empty())
            fail("empty relation term", term_start);
        std::size_t p = 0;
        while (p <= path.size()) {
            std::size_t dot = path.find('.', p);
            if (dot == std::string::npos)
                dot = path.size();
            std::string name = path.substr(p, dot - p);
            auto a = q.find_arrow(name);
            if (!a)
                fail("unknown arrow '" + name + "'", i + p);
            term.path.push_back(*a);
            p = dot + 1;
        }
        for (std::size_t k = 0; k + 1 < term.path.size(); ++k)
            if (q.arrows()[term.path[k]].src != q.arrows()[term.path[k + 1]].dst)
                fail("non-composable relation path '" + path + "'", i);
        rel.terms.push_back(std::move(term));
        i = end;
    }
    if (rel.terms.empty())
        fail("empty relation", 0);
    return rel;
}

} // namespace

Quiver parse_quiver(std::string_view text)
{
    enum class Section { None, Vertices, Arrows, Relations };
    Quiver q;
    Section section = Section::None;
    for (const auto& tok : tokenize(text)) {
        if (tok.text == ";") {
            section = Section::None;
            continue;
        }
        if (tok.text == "vertices") {
            section = Section::Vertices;
            continue;
        }
        if (tok.text == "arrows") {
            section = Section::Arrows;
            continue;
        }
        if (tok.text == "relations") {
            section = Section::Relations;
            continue;
        }
        try {
            switch (section) {
            case Section::None:
                throw ParseError("expected 'vertices', 'arrows' or 'relations', got '" + tok.text + "'", tok.line,
                                 tok.column);
            case Section::Vertices: {
                auto colon = tok.text.find(':');
                std::string id = tok.text.substr(0, colon);
                std::string label = colon == std::string::npos ? std::string() : tok.text.substr(colon + 1);
                if (id.empty())
                    throw ParseError("empty vertex id", tok.line, tok.column);
                q.add_vertex(id, label);
                break;
            }
            case Section::Arrows: {
                auto colon = tok.text.find(':');
                auto arrow = tok.text.find("->");
                if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
                    throw ParseError("malformed arrow '" + tok.text + "', expected id:src->dst", tok.line,
                                     tok.column);
                std::string id = tok.text.substr(0, colon);
                std::string src = tok.text.substr(colon + 1, arrow - colon - 1);
                std::string rest = tok.text.substr(arrow + 2);
                auto lc = rest.find(':');
                std::string dst = rest.substr(0, lc);
                std::string label = lc == std::string::npos ? std::string() : rest.substr(lc + 1);
                if (id.empty() || src.empty() || dst.empty())
                    throw ParseError("malformed arrow '" + tok.text + "'", tok.line, tok.column);
                if (!q.find_vertex(src))
                    throw ParseError("unknown vertex '" + src + "'", tok.line,
                                     tok.column + static_cast<int>(colon + 1));
                if (!q.find_vertex(dst))
                    throw ParseError("unknown vertex '" + dst + "'", tok.line,
                                     tok.column + static_cast<int>(arrow + 2));
                q.add_arrow(id, src, dst, label);
                break;
            }
            case Section::Relations:
                q.add_relation(parse_relation(q, tok));
                break;
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), tok.line, tok.column);
        }
    }
    return q;
}

} // namespace arqkit
