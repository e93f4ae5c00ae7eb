#include "arqkit/error.hpp"
#include "arqkit/translation_quiver.hpp"

#include <charconv>
#include <sstream>

namespace arqkit {

namespace {

struct Field {
    std::string text;
    int column;
    bool quoted;
};

std::vector<Field> split_fields(const std::string& line, int lineno)
{
    std::vector<Field> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#')
            break;
        Field f{{}, static_cast<int>(i) + 1, false};
        if (c == '"') {
            f.quoted = true;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    f.text += line[i + 1];
                    i += 2;
                } else if (line[i] == '"') {
                    closed = true;
                    ++i;
                    break;
                } else {
                    f.text += line[i++];
                }
            }
            if (!closed)
                throw ParseError("unterminated quoted label", lineno, f.column);
        } else {
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
                f.text += line[i++];
        }
        out.push_back(std::move(f));
    }
    return out;
}

Int parse_int(const Field& f, int lineno)
{
    if (f.text.empty())
        throw ParseError("expected an integer", lineno, f.column);
    std::size_t start = f.text[0] == '-' ? 1 : 0;
    if (start == f.text.size())
        throw ParseError("expected an integer", lineno, f.column);
    for (std::size_t i = start; i < f.text.size(); ++i)
        if (f.text[i] < '0' || f.text[i] > '9')
            throw ParseError("expected an integer, got '" + f.text + "'", lineno, f.column);
    return Int(f.text);
}

int parse_small(const Field& f, int lineno)
{
    int v = 0;
    auto [p, ec] = std::from_chars(f.text.data(), f.text.data() + f.text.size(), v);
    if (ec != std::errc() || p != f.text.data() + f.text.size())
        throw ParseError("expected an integer, got '" + f.text + "'", lineno, f.column);
    return v;
}

std::string quote(const std::string& s)
{
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            r += '\\';
        r += c;
    }
    return r + '"';
}

struct ArrowRecord {
    Field src, dst;
    int val;
    int line;
};

struct TauRecord {
    Field z, tz;
    int line;
};

} // namespace

TranslationQuiver parse_ar_quiver(std::string_view text)
{
    TranslationQuiver tq;
    std::vector<ArrowRecord> arrows;
    std::vector<TauRecord> taus;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_fields(line, lineno);
        if (fields.empty())
            continue;
        const std::string& kind = fields[0].text;
        if (!header) {
            if (kind != "arq" || fields.size() != 2 || fields[1].text != "1")
                throw ParseError("expected header 'arq 1'", lineno, fields[0].column);
            header = true;
            continue;
        }
        if (kind == "vertex") {
            if (fields.size() != 6)
                throw ParseError("vertex record needs: id label dims length flags", lineno, fields[0].column);
            TqVertex v;
            v.id = fields[1].text;
            v.label = fields[2].text;
            if (fields[3].text != "-" || fields[3].quoted) {
                IntVec dim;
                std::size_t p = 0;
                const std::string& s = fields[3].text;
                while (p <= s.size()) {
                    auto comma = s.find(',', p);
                    if (comma == std::string::npos)
                        comma = s.size();
                    dim.push_back(parse_int({s.substr(p, comma - p), fields[3].column + static_cast<int>(p), false},
                                            lineno));
                    p = comma + 1;
                }
                v.dim = std::move(dim);
            }
            if (fields[4].text != "-")
                v.length = parse_int(fields[4], lineno);
            if (fields[5].text != "-") {
                for (char c : fields[5].text) {
                    switch (c) {
                    case 'P': v.projective = true; break;
                    case 'I': v.ext_injective = true; break;
                    case 'M': v.mesh_complete = true; break;
                    case 'L': v.left_infinite = true; break;
                    case 'R': v.right_infinite = true; break;
                    default:
                        throw ParseError(std::string("unknown flag '") + c + "'", lineno, fields[5].column);
                    }
                }
            }
            try {
                tq.add_vertex(std::move(v));
            } catch (const Error& e) {
                throw ParseError(e.what(), lineno, fields[1].column);
            }
        } else if (kind == "arrow") {
            if (fields.size() != 4)
                throw ParseError("arrow record needs: src dst valuation", lineno, fields[0].column);
            arrows.push_back({fields[1], fields[2], parse_small(fields[3], lineno), lineno});
        } else if (kind == "tau") {
            if (fields.size() != 3)
                throw ParseError("tau record needs: vertex translate", lineno, fields[0].column);
            taus.push_back({fields[1], fields[2], lineno});
        } else {
            throw ParseError("unknown record '" + kind + "'", lineno, fields[0].column);
        }
    }
    auto lookup = [&](const Field& f, int ln) {
        auto v = tq.find(f.text);
        if (!v)
            throw ParseError("unknown vertex '" + f.text + "'", ln, f.column);
        return *v;
    };
    for (const auto& a : arrows) {
        int s = lookup(a.src, a.line);
        int d = lookup(a.dst, a.line);
        try {
            tq.add_arrow(s, d, a.val);
        } catch (const Error& e) {
            throw ParseError(e.what(), a.line, a.src.column);
        }
    }
    for (const auto& t : taus) {
        int z = lookup(t.z, t.line);
        int tz = lookup(t.tz, t.line);
        try {
            tq.set_tau(z, tz);
        } catch (const Error& e) {
            throw ParseError(e.what(), t.line, t.z.column);
        }
    }
    return tq;
}

std::string export_ar_quiver(const TranslationQuiver& tq)
{
    std::ostringstream out;
    out << "arq 1\n";
    for (const auto& v : tq.vertices()) {
        out << "vertex " << v.id << ' ' << quote(v.label) << ' ';
        out << (v.dim ? to_string(*v.dim) : std::string("-")) << ' ';
        out << (v.length ? v.length->str() : std::string("-")) << ' ';
        std::string flags;
        if (v.projective)
            flags += 'P';
        if (v.ext_injective)
            flags += 'I';
        if (v.mesh_complete)
            flags += 'M';
        if (v.left_infinite)
            flags += 'L';
        if (v.right_infinite)
            flags += 'R';
        out << (flags.empty() ? "-" : flags) << '\n';
    }
    for (const auto& a : tq.arrows())
        out << "arrow " << tq.vertex(a.src).id << ' ' << tq.vertex(a.dst).id << ' ' << a.val << '\n';
    for (auto [z, tz] : tq.tau_pairs())
        out << "tau " << tq.vertex(z).id << ' ' << tq.vertex(tz).id << '\n';
    return out.str();
}

std::string export_dot(const TranslationQuiver& tq)
{
    std::ostringstream out;
    out << "digraph AR {\n";
    if (!tq.empty())
        out << "  node [shape=plaintext];\n";
    for (const auto& v : tq.vertices()) {
        std::string label = v.label;
        if (v.projective)
            label = "[" + label;
        if (v.ext_injective)
            label += "]";
        out << "  " << quote(v.id) << " [label=" << quote(label) << "];\n";
    }
    for (const auto& a : tq.arrows()) {
        out << "  " << quote(tq.vertex(a.src).id) << " -> " << quote(tq.vertex(a.dst).id);
        if (a.val > 1)
            out << " [xlabel=\"" << a.val << "\"]";
        out << ";\n";
    }
    for (auto [z, tz] : tq.tau_pairs())
        out << "  " << quote(tq.vertex(z).id) << " -> " << quote(tq.vertex(tz).id) << " [style=dotted];\n";
    out << "}\n";
    return out.str();
}

} // namespace arqkit
