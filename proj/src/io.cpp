#include "edk/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace edk {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool looks_like_dot(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty() || body.starts_with("//"))
            continue;
        return body.starts_with("graph") || body.starts_with("strict") || body.starts_with("digraph");
    }
    return false;
}

void add_checked_edge(GraphBuilder& builder, std::string_view a, std::string_view b, int line,
                      std::vector<std::string>& warnings)
{
    if (a == b)
        throw ParseError(line, "self-loop at '" + std::string(a) + "'");
    if (!builder.add_edge(a, b))
        warnings.push_back("line " + std::to_string(line) + ": duplicate edge " + std::string(a) + " " +
                           std::string(b) + " ignored");
}

ParsedGraph parse_edge_list(std::string_view text)
{
    GraphBuilder builder;
    ParsedGraph result;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto body = std::string_view(raw);
        if (auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        auto tokens = split_ws(body);
        if (tokens.empty())
            continue;
        if (tokens.size() != 2)
            throw ParseError(line, "expected 'A B' or 'v A', got '" + std::string(trim(body)) + "'");
        if (tokens[0] == "v")
            builder.add_vertex(tokens[1]);
        else
            add_checked_edge(builder, tokens[0], tokens[1], line, result.warnings);
    }
    result.graph = builder.build();
    return result;
}

struct Token {
    enum Kind { kId, kLBrace, kRBrace, kSemi, kEdgeOp, kEnd } kind;
    std::string text;
    int line;
};

std::vector<Token> tokenize_dot(std::string_view text)
{
    std::vector<Token> tokens;
    int line = 1;
    std::size_t i = 0;
    auto is_id_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
               static_cast<unsigned char>(c) >= 0x80;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (c == '{') {
            tokens.push_back({Token::kLBrace, "{", line});
            ++i;
        } else if (c == '}') {
            tokens.push_back({Token::kRBrace, "}", line});
            ++i;
        } else if (c == ';' || c == ',') {
            tokens.push_back({Token::kSemi, ";", line});
            ++i;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            tokens.push_back({Token::kEdgeOp, "--", line});
            i += 2;
        } else if (c == '"') {
            std::size_t j = i + 1;
            std::string id;
            while (j < text.size() && text[j] != '"') {
                if (text[j] == '\\' && j + 1 < text.size())
                    ++j;
                if (text[j] == '\n')
                    throw ParseError(line, "unterminated string");
                id.push_back(text[j]);
                ++j;
            }
            if (j >= text.size())
                throw ParseError(line, "unterminated string");
            tokens.push_back({Token::kId, id, line});
            i = j + 1;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            throw ParseError(line, "directed edges are not supported");
        } else if (c == '[') {
            throw ParseError(line, "attributes are not supported");
        } else if (is_id_char(c) || c == '-') {
            std::size_t j = i + 1;
            while (j < text.size() && is_id_char(text[j]))
                ++j;
            tokens.push_back({Token::kId, std::string(text.substr(i, j - i)), line});
            i = j;
        } else {
            throw ParseError(line, std::string("unexpected character '") + c + "'");
        }
    }
    tokens.push_back({Token::kEnd, "", line});
    return tokens;
}

ParsedGraph parse_dot(std::string_view text)
{
    auto tokens = tokenize_dot(text);
    std::size_t pos = 0;
    auto expect = [&](Token::Kind kind, const char* what) -> const Token& {
        if (tokens[pos].kind != kind)
            throw ParseError(tokens[pos].line, std::string("expected ") + what);
        return tokens[pos++];
    };

    if (tokens[pos].kind == Token::kId && tokens[pos].text == "strict")
        ++pos;
    if (tokens[pos].kind == Token::kId && tokens[pos].text == "digraph")
        throw ParseError(tokens[pos].line, "directed graphs are not supported");
    if (tokens[pos].kind != Token::kId || tokens[pos].text != "graph")
        throw ParseError(tokens[pos].line, "expected 'graph'");
    ++pos;
    if (tokens[pos].kind == Token::kId)
        ++pos;  // graph name
    expect(Token::kLBrace, "'{'");

    GraphBuilder builder;
    ParsedGraph result;
    while (tokens[pos].kind != Token::kRBrace) {
        if (tokens[pos].kind == Token::kSemi) {
            ++pos;
            continue;
        }
        if (tokens[pos].kind == Token::kEnd)
            throw ParseError(tokens[pos].line, "missing '}'");
        const Token& first = expect(Token::kId, "vertex id");
        std::string prev = first.text;
        builder.add_vertex(prev);
        while (tokens[pos].kind == Token::kEdgeOp) {
            ++pos;
            const Token& next = expect(Token::kId, "vertex id after '--'");
            add_checked_edge(builder, prev, next.text, next.line, result.warnings);
            prev = next.text;
        }
        if (tokens[pos].kind != Token::kSemi && tokens[pos].kind != Token::kRBrace &&
            tokens[pos].kind != Token::kId)
            throw ParseError(tokens[pos].line, "expected ';' or '}'");
    }
    ++pos;
    if (tokens[pos].kind != Token::kEnd)
        throw ParseError(tokens[pos].line, "trailing content after '}'");
    result.graph = builder.build();
    return result;
}

std::string dot_id(const std::string& label)
{
    bool plain = !label.empty();
    for (char c : label)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            plain = false;
    if (plain)
        return label;
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

}  // namespace

ParsedGraph parse_graph(std::string_view text)
{
    return looks_like_dot(text) ? parse_dot(text) : parse_edge_list(text);
}

ParsedGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    // Vertex lines are only needed when the edges alone would not reproduce the ids.
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    Vertex next = 0;
    bool ids_preserved = true;
    for (auto [u, v] : g.edges()) {
        for (Vertex w : {u, v}) {
            if (seen[static_cast<std::size_t>(w)])
                continue;
            seen[static_cast<std::size_t>(w)] = true;
            ids_preserved = ids_preserved && w == next++;
        }
    }
    ids_preserved = ids_preserved && next == g.order();
    if (!ids_preserved)
        for (Vertex v = 0; v < g.order(); ++v)
            out << "v " << g.label(v) << '\n';
    for (auto [u, v] : g.edges())
        out << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

std::string write_dot(const Graph& g)
{
    std::ostringstream out;
    out << "graph {\n";
    // Declaring every vertex up front keeps ids stable on re-parse.
    for (Vertex v = 0; v < g.order(); ++v)
        out << "  " << dot_id(g.label(v)) << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << dot_id(g.label(u)) << " -- " << dot_id(g.label(v)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace edk
