#include "htn/hddl/parser.h"

#include "htn/hddl/errors.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace htn::hddl {

namespace {

constexpr std::array supported_requirements = {
    ":typing", ":negative-preconditions", ":hierarchy", ":htn",
    ":method-preconditions", ":strips", ":equality",
};

std::string describe(const Token &t) {
    return std::string(to_string(t.kind)) + " '" + t.text + "'";
}

class Cursor {
public:
    explicit Cursor(std::span<const Token> tokens) : tokens_(tokens) {}

    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token &peek() const {
        if (at_end())
            fail("more input");
        return tokens_[pos_];
    }
    bool peek_is(TokenKind kind, std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() && tokens_[pos_ + ahead].kind == kind;
    }
    bool peek_is(TokenKind kind, std::string_view text) const {
        return peek_is(kind) && tokens_[pos_].text == text;
    }

    const Token &next() {
        const Token &t = peek();
        ++pos_;
        return t;
    }

    const Token &expect(TokenKind kind, const std::string &what) {
        if (!peek_is(kind))
            fail(what);
        return next();
    }
    void lparen() { expect(TokenKind::LParen, "'('"); }
    void rparen() { expect(TokenKind::RParen, "')'"); }
    const Token &keyword(std::string_view text) {
        if (!peek_is(TokenKind::Keyword, text))
            fail("'" + std::string(text) + "'");
        return next();
    }
    const Token &ident(std::string_view text) {
        if (!peek_is(TokenKind::Ident, text))
            fail("'" + std::string(text) + "'");
        return next();
    }
    const Token &name(const std::string &what = "identifier") { return expect(TokenKind::Ident, what); }

    /// `()` or `(and)`, consumed if present.
    bool empty_form() {
        if (peek_is(TokenKind::LParen) && peek_is(TokenKind::RParen, 1)) {
            pos_ += 2;
            return true;
        }
        if (peek_is(TokenKind::LParen) && pos_ + 2 < tokens_.size() &&
            tokens_[pos_ + 1].kind == TokenKind::Ident && tokens_[pos_ + 1].text == "and" &&
            tokens_[pos_ + 2].kind == TokenKind::RParen) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string &expected) const {
        if (at_end()) {
            auto [line, column] = end_position();
            throw SyntaxError(line, column, expected, "end of input");
        }
        const Token &t = tokens_[pos_];
        throw SyntaxError(t.line, t.column, expected, describe(t));
    }

    std::pair<int, int> end_position() const {
        if (tokens_.empty())
            return {1, 1};
        const Token &last = tokens_.back();
        return {last.line, last.column + static_cast<int>(last.text.size())};
    }

private:
    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
};

SourceLoc loc_of(const Token &t) { return {t.line, t.column}; }

// ---------------------------------------------------------------------------
// Shared syntactic pieces

std::vector<std::string> parse_requirements(Cursor &in) {
    std::vector<std::string> flags;
    while (!in.peek_is(TokenKind::RParen)) {
        const Token &flag = in.expect(TokenKind::Keyword, "requirement flag");
        if (!is_supported_requirement(flag.text))
            throw UnsupportedRequirement(flag.line, flag.column, flag.text);
        flags.push_back(flag.text);
    }
    in.rparen();
    return flags;
}

/// Type locations for semantic checks: the parser remembers where each type
/// name token of a typed list appeared.
struct TypedListWithTypeLocs {
    std::vector<TypedName> names;
    std::vector<SourceLoc> type_locs;
};

TypedListWithTypeLocs parse_typed_list_locs(Cursor &in, bool variables) {
    TypedListWithTypeLocs out;
    std::size_t untyped_from = 0;
    const TokenKind kind = variables ? TokenKind::Variable : TokenKind::Ident;
    const std::string what = variables ? "variable" : "name";
    while (!in.peek_is(TokenKind::RParen)) {
        if (in.peek_is(TokenKind::Ident, "-")) {
            in.next();
            if (untyped_from == out.names.size())
                in.fail(what);
            if (in.peek_is(TokenKind::LParen))
                in.fail("type name ('either' is not supported)");
            const Token &type = in.name("type name");
            for (std::size_t i = untyped_from; i < out.names.size(); ++i) {
                out.names[i].type = type.text;
                out.type_locs[i] = loc_of(type);
            }
            untyped_from = out.names.size();
            continue;
        }
        const Token &t = in.expect(kind, what);
        out.names.push_back({t.text, root_type, loc_of(t)});
        out.type_locs.push_back(loc_of(t));
    }
    return out;
}

TermAst parse_term(Cursor &in) {
    if (in.peek_is(TokenKind::Variable) || in.peek_is(TokenKind::Ident)) {
        const Token &t = in.next();
        return {t.text, loc_of(t)};
    }
    in.fail("variable or constant");
}

/// After '(' has been consumed: NAME term* ')'.
AtomAst parse_atom_body(Cursor &in, const std::string &what) {
    const Token &head = in.name(what);
    AtomAst atom{head.text, {}, loc_of(head)};
    while (!in.peek_is(TokenKind::RParen))
        atom.args.push_back(parse_term(in));
    in.rparen();
    return atom;
}

AtomAst parse_atom(Cursor &in, const std::string &what) {
    in.lparen();
    return parse_atom_body(in, what);
}

bool is_unsupported_connective(const std::string &s) {
    return s == "or" || s == "forall" || s == "exists" || s == "imply" || s == "when";
}

void parse_condition_into(Cursor &in, std::vector<LiteralAst> &out) {
    if (in.empty_form())
        return;
    in.lparen();
    if (in.peek_is(TokenKind::Ident, "and")) {
        in.next();
        while (!in.peek_is(TokenKind::RParen))
            parse_condition_into(in, out);
        in.rparen();
        return;
    }
    if (in.peek_is(TokenKind::Ident, "not")) {
        in.next();
        AtomAst atom = parse_atom(in, "predicate name");
        in.rparen();
        out.push_back({std::move(atom), false});
        return;
    }
    if (in.peek_is(TokenKind::Ident) && is_unsupported_connective(in.peek().text))
        in.fail("literal (only conjunctions of literals are supported)");
    out.push_back({parse_atom_body(in, "predicate name"), true});
}

std::vector<LiteralAst> parse_condition(Cursor &in) {
    std::vector<LiteralAst> out;
    parse_condition_into(in, out);
    return out;
}

SubtaskAst parse_subtask(Cursor &in, std::size_t index) {
    in.lparen();
    if (in.peek_is(TokenKind::Ident) && in.peek_is(TokenKind::LParen, 1)) {
        const Token &label = in.next();
        AtomAst task = parse_atom(in, "task name");
        in.rparen();
        return {label.text, std::move(task)};
    }
    return {"_t" + std::to_string(index), parse_atom_body(in, "task name")};
}

std::vector<SubtaskAst> parse_subtasks(Cursor &in) {
    std::vector<SubtaskAst> out;
    if (in.empty_form())
        return out;
    if (in.peek_is(TokenKind::LParen) && in.peek_is(TokenKind::Ident, 1) && in.peek_is(TokenKind::LParen, 2)) {
        // (and (...) ...) or a single labeled subtask (label (task ...))
        Cursor probe = in;
        probe.lparen();
        if (probe.peek().text == "and") {
            in.lparen();
            in.next();
            while (!in.peek_is(TokenKind::RParen))
                out.push_back(parse_subtask(in, out.size()));
            in.rparen();
            return out;
        }
    }
    out.push_back(parse_subtask(in, 0));
    return out;
}

OrderingAst parse_order_pair(Cursor &in) {
    in.lparen();
    const Token &op = in.peek();
    if (!in.peek_is(TokenKind::Ident, "<") && !in.peek_is(TokenKind::Ident, ">"))
        in.fail("'<'");
    in.next();
    const Token &a = in.name("subtask label");
    const Token &b = in.name("subtask label");
    in.rparen();
    if (op.text == ">")
        return {b.text, a.text, loc_of(b), loc_of(a)};
    return {a.text, b.text, loc_of(a), loc_of(b)};
}

std::vector<OrderingAst> parse_ordering(Cursor &in) {
    std::vector<OrderingAst> out;
    if (in.empty_form())
        return out;
    if (in.peek_is(TokenKind::LParen) && in.peek_is(TokenKind::Ident, 1)) {
        Cursor probe = in;
        probe.lparen();
        if (probe.peek().text == "and") {
            in.lparen();
            in.next();
            while (!in.peek_is(TokenKind::RParen))
                out.push_back(parse_order_pair(in));
            in.rparen();
            return out;
        }
    }
    out.push_back(parse_order_pair(in));
    return out;
}

void parse_empty_constraints(Cursor &in) {
    if (!in.empty_form())
        in.fail("empty :constraints (constraints are not supported)");
}

/// Parses the keyword/value pairs describing a task network until ')'.
/// Returns false if the keyword was not a network keyword.
bool parse_network_keyword(Cursor &in, TaskNetworkAst &network, bool &seen_subtasks, bool &seen_ordering) {
    const Token &kw = in.peek();
    if (kw.kind != TokenKind::Keyword)
        return false;
    if (kw.text == ":ordered-subtasks" || kw.text == ":ordered-tasks" || kw.text == ":subtasks" ||
        kw.text == ":tasks") {
        if (seen_subtasks)
            throw SemanticError(kw.line, kw.column, "duplicate subtask section");
        in.next();
        network.totally_ordered = kw.text.starts_with(":ordered");
        network.subtasks = parse_subtasks(in);
        seen_subtasks = true;
        if (network.totally_ordered && seen_ordering && !network.ordering.empty())
            throw SemanticError(kw.line, kw.column, "ordered subtasks cannot carry an :ordering section");
        return true;
    }
    if (kw.text == ":ordering") {
        in.next();
        network.ordering = parse_ordering(in);
        seen_ordering = true;
        if (seen_subtasks && network.totally_ordered && !network.ordering.empty())
            throw SemanticError(kw.line, kw.column, "ordered subtasks cannot carry an :ordering section");
        return true;
    }
    if (kw.text == ":constraints") {
        in.next();
        parse_empty_constraints(in);
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Semantic checking

struct Scope {
    std::unordered_map<std::string, std::string> variables;  // name -> type
};

class DomainChecker {
public:
    explicit DomainChecker(const LiftedDomainAst &d) : d_(d) {}

    void check_types(const std::vector<SourceLoc> &parent_locs) {
        types_.insert(root_type);
        for (const auto &t : d_.types) {
            if (!types_.insert(t.name).second)
                throw SemanticError(t.loc.line, t.loc.column, "duplicate type '" + t.name + "'");
        }
        for (std::size_t i = 0; i < d_.types.size(); ++i) {
            const auto &t = d_.types[i];
            if (!types_.contains(t.type))
                throw SemanticError(parent_locs[i].line, parent_locs[i].column,
                                    "undeclared type '" + t.type + "'");
            parent_[t.name] = t.type;
        }
        for (const auto &t : d_.types) {
            std::set<std::string> seen{t.name};
            std::string cur = t.name;
            while (parent_.contains(cur)) {
                cur = parent_[cur];
                if (!seen.insert(cur).second)
                    throw SemanticError(t.loc.line, t.loc.column, "cyclic type hierarchy at '" + t.name + "'");
            }
        }
    }

    void require_type(const std::string &type, SourceLoc loc) const {
        if (!types_.contains(type))
            throw SemanticError(loc.line, loc.column, "undeclared type '" + type + "'");
    }

    void check_typed(const std::vector<TypedName> &names, const std::vector<SourceLoc> &type_locs,
                     const char *what) const {
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < names.size(); ++i) {
            require_type(names[i].type, type_locs[i]);
            if (!seen.insert(names[i].name).second)
                throw SemanticError(names[i].loc.line, names[i].loc.column,
                                    std::string("duplicate ") + what + " '" + names[i].name + "'");
        }
    }

    void declare_constants() {
        for (const auto &c : d_.constants)
            constants_.insert(c.name);
    }

    void declare_signatures() {
        for (const auto &p : d_.predicates) {
            if (!predicates_.emplace(p.name, p.parameters.size()).second)
                throw SemanticError(p.loc.line, p.loc.column, "duplicate predicate '" + p.name + "'");
        }
        for (const auto &t : d_.compound_tasks) {
            if (!tasks_.emplace(t.name, TaskInfo{t.parameters.size(), true}).second)
                throw SemanticError(t.loc.line, t.loc.column, "duplicate task '" + t.name + "'");
        }
        for (const auto &a : d_.actions) {
            if (!tasks_.emplace(a.name, TaskInfo{a.parameters.size(), false}).second)
                throw SemanticError(a.loc.line, a.loc.column, "duplicate task or action '" + a.name + "'");
        }
        std::unordered_set<std::string> methods;
        for (const auto &m : d_.methods) {
            if (!methods.insert(m.name).second)
                throw SemanticError(m.loc.line, m.loc.column, "duplicate method '" + m.name + "'");
        }
    }

    void check_term(const TermAst &t, const Scope *scope) const {
        if (t.is_variable()) {
            if (scope == nullptr || !scope->variables.contains(t.text))
                throw SemanticError(t.loc.line, t.loc.column, "undeclared variable '" + t.text + "'");
        } else if (!constants_.contains(t.text) && (extra_objects_ == nullptr || !extra_objects_->contains(t.text))) {
            throw SemanticError(t.loc.line, t.loc.column, "undeclared constant '" + t.text + "'");
        }
    }

    void check_literal(const LiteralAst &lit, const Scope *scope, bool effect) const {
        const AtomAst &a = lit.atom;
        if (a.name == "=") {
            if (effect)
                throw SemanticError(a.loc.line, a.loc.column, "equality is not allowed in effects");
            if (a.args.size() != 2)
                throw SemanticError(a.loc.line, a.loc.column, "equality takes exactly 2 arguments");
        } else {
            auto it = predicates_.find(a.name);
            if (it == predicates_.end())
                throw SemanticError(a.loc.line, a.loc.column, "undeclared predicate '" + a.name + "'");
            if (it->second != a.args.size())
                throw SemanticError(a.loc.line, a.loc.column,
                                    "predicate '" + a.name + "' expects " + std::to_string(it->second) +
                                        " arguments, got " + std::to_string(a.args.size()));
        }
        for (const auto &t : a.args)
            check_term(t, scope);
    }

    void check_task_atom(const AtomAst &a, const Scope *scope, bool must_be_compound) const {
        auto it = tasks_.find(a.name);
        if (it == tasks_.end())
            throw SemanticError(a.loc.line, a.loc.column, "undeclared task '" + a.name + "'");
        if (must_be_compound && !it->second.compound)
            throw SemanticError(a.loc.line, a.loc.column, "'" + a.name + "' is not a compound task");
        if (it->second.arity != a.args.size())
            throw SemanticError(a.loc.line, a.loc.column,
                                "task '" + a.name + "' expects " + std::to_string(it->second.arity) +
                                    " arguments, got " + std::to_string(a.args.size()));
        for (const auto &t : a.args)
            check_term(t, scope);
    }

    void check_network(const TaskNetworkAst &n, const Scope *scope) const {
        std::unordered_set<std::string> labels;
        for (const auto &st : n.subtasks) {
            if (!labels.insert(st.label).second)
                throw SemanticError(st.task.loc.line, st.task.loc.column, "duplicate subtask label '" + st.label + "'");
            check_task_atom(st.task, scope, false);
        }
        for (const auto &o : n.ordering) {
            if (!labels.contains(o.before))
                throw SemanticError(o.before_loc.line, o.before_loc.column, "undeclared subtask label '" + o.before + "'");
            if (!labels.contains(o.after))
                throw SemanticError(o.after_loc.line, o.after_loc.column, "undeclared subtask label '" + o.after + "'");
            if (o.before == o.after)
                throw SemanticError(o.after_loc.line, o.after_loc.column, "subtask '" + o.before + "' ordered before itself");
        }
    }

    static Scope scope_of(const std::vector<TypedName> &params) {
        Scope s;
        for (const auto &p : params)
            s.variables.emplace(p.name, p.type);
        return s;
    }

    void check_action(const LiftedActionAst &a) const {
        const Scope s = scope_of(a.parameters);
        for (const auto &l : a.precondition)
            check_literal(l, &s, false);
        for (const auto &l : a.effect)
            check_literal(l, &s, true);
    }

    void check_method(const LiftedMethodAst &m) const {
        const Scope s = scope_of(m.parameters);
        check_task_atom(m.task, &s, true);
        for (const auto &l : m.precondition)
            check_literal(l, &s, false);
        check_network(m.network, &s);
    }

    void set_extra_objects(const std::unordered_set<std::string> *objects) { extra_objects_ = objects; }
    bool has_constant(const std::string &name) const { return constants_.contains(name); }

private:
    struct TaskInfo {
        std::size_t arity;
        bool compound;
    };
    const LiftedDomainAst &d_;
    std::unordered_set<std::string> types_;
    std::unordered_map<std::string, std::string> parent_;
    std::unordered_set<std::string> constants_;
    std::unordered_map<std::string, std::size_t> predicates_;
    std::unordered_map<std::string, TaskInfo> tasks_;
    const std::unordered_set<std::string> *extra_objects_ = nullptr;
};

/// Everything the checker needs that is not kept in the AST.
struct DomainTypeLocs {
    std::vector<SourceLoc> type_parents;
    std::vector<SourceLoc> constants;
    std::vector<std::vector<SourceLoc>> predicates;
    std::vector<std::vector<SourceLoc>> tasks;
    std::vector<std::vector<SourceLoc>> actions;
    std::vector<std::vector<SourceLoc>> methods;
};

SignatureAst parse_signature(Cursor &in, std::vector<SourceLoc> &type_locs, const std::string &what) {
    in.lparen();
    const Token &name = in.name(what);
    auto typed = parse_typed_list_locs(in, true);
    in.rparen();
    type_locs = std::move(typed.type_locs);
    return {name.text, std::move(typed.names), loc_of(name)};
}

void parse_parameters(Cursor &in, std::vector<TypedName> &params, std::vector<SourceLoc> &type_locs) {
    in.keyword(":parameters");
    in.lparen();
    auto typed = parse_typed_list_locs(in, true);
    in.rparen();
    params = std::move(typed.names);
    type_locs = std::move(typed.type_locs);
}

LiftedActionAst parse_action(Cursor &in, std::vector<SourceLoc> &type_locs) {
    const Token &name = in.name("action name");
    LiftedActionAst a{name.text, {}, {}, {}, loc_of(name)};
    if (in.peek_is(TokenKind::Keyword, ":parameters"))
        parse_parameters(in, a.parameters, type_locs);
    bool seen_pre = false, seen_eff = false;
    while (!in.peek_is(TokenKind::RParen)) {
        if (in.peek_is(TokenKind::Keyword, ":precondition") && !seen_pre) {
            in.next();
            a.precondition = parse_condition(in);
            seen_pre = true;
        } else if (in.peek_is(TokenKind::Keyword, ":effect") && !seen_eff) {
            in.next();
            a.effect = parse_condition(in);
            seen_eff = true;
        } else {
            in.fail("':precondition', ':effect' or ')'");
        }
    }
    in.rparen();
    return a;
}

LiftedMethodAst parse_method(Cursor &in, std::vector<SourceLoc> &type_locs) {
    const Token &name = in.name("method name");
    LiftedMethodAst m;
    m.name = name.text;
    m.loc = loc_of(name);
    if (in.peek_is(TokenKind::Keyword, ":parameters"))
        parse_parameters(in, m.parameters, type_locs);
    in.keyword(":task");
    m.task = parse_atom(in, "task name");
    bool seen_pre = false, seen_subtasks = false, seen_ordering = false;
    while (!in.peek_is(TokenKind::RParen)) {
        if (in.peek_is(TokenKind::Keyword, ":precondition") && !seen_pre) {
            in.next();
            m.precondition = parse_condition(in);
            seen_pre = true;
        } else if (!parse_network_keyword(in, m.network, seen_subtasks, seen_ordering)) {
            in.fail("':precondition', ':ordered-subtasks', ':subtasks', ':ordering' or ')'");
        }
    }
    in.rparen();
    if (m.network.totally_ordered && !m.network.ordering.empty())
        throw SemanticError(m.loc.line, m.loc.column, "ordered subtasks cannot carry an :ordering section");
    return m;
}

}  // namespace

bool is_supported_requirement(std::string_view flag) {
    return std::find(supported_requirements.begin(), supported_requirements.end(), flag) !=
           supported_requirements.end();
}

LiftedDomainAst parse_domain(std::span<const Token> tokens) {
    Cursor in(tokens);
    LiftedDomainAst d;
    DomainTypeLocs locs;

    in.lparen();
    in.ident("define");
    in.lparen();
    in.ident("domain");
    d.name = in.name("domain name").text;
    in.rparen();

    bool types_seen = false;
    while (!in.peek_is(TokenKind::RParen)) {
        in.lparen();
        const Token &section = in.expect(TokenKind::Keyword, "section keyword");
        if (section.text == ":requirements") {
            auto flags = parse_requirements(in);
            d.requirements.insert(d.requirements.end(), flags.begin(), flags.end());
            continue;
        }
        if (section.text == ":types") {
            if (types_seen)
                throw SemanticError(section.line, section.column, "duplicate :types section");
            types_seen = true;
            auto typed = parse_typed_list_locs(in, false);
            in.rparen();
            for (std::size_t i = 0; i < typed.names.size(); ++i) {
                if (typed.names[i].name == root_type)
                    continue;
                d.types.push_back(typed.names[i]);
                locs.type_parents.push_back(typed.type_locs[i]);
            }
        } else if (section.text == ":constants") {
            auto typed = parse_typed_list_locs(in, false);
            in.rparen();
            d.constants.insert(d.constants.end(), typed.names.begin(), typed.names.end());
            locs.constants.insert(locs.constants.end(), typed.type_locs.begin(), typed.type_locs.end());
        } else if (section.text == ":predicates") {
            while (!in.peek_is(TokenKind::RParen)) {
                locs.predicates.emplace_back();
                d.predicates.push_back(parse_signature(in, locs.predicates.back(), "predicate name"));
            }
            in.rparen();
        } else if (section.text == ":tasks") {
            while (!in.peek_is(TokenKind::RParen)) {
                locs.tasks.emplace_back();
                if (in.peek_is(TokenKind::LParen) && in.peek_is(TokenKind::Ident, 1) &&
                    !in.peek_is(TokenKind::Variable, 2) && !in.peek_is(TokenKind::RParen, 2)) {
                    // (task NAME :parameters (...)) variant
                    Cursor probe = in;
                    probe.lparen();
                    if (probe.peek().text == "task") {
                        in.lparen();
                        in.next();
                        const Token &name = in.name("task name");
                        SignatureAst sig{name.text, {}, loc_of(name)};
                        if (in.peek_is(TokenKind::Keyword, ":parameters"))
                            parse_parameters(in, sig.parameters, locs.tasks.back());
                        in.rparen();
                        d.compound_tasks.push_back(std::move(sig));
                        continue;
                    }
                }
                d.compound_tasks.push_back(parse_signature(in, locs.tasks.back(), "task name"));
            }
            in.rparen();
        } else if (section.text == ":task") {
            const Token &name = in.name("task name");
            SignatureAst sig{name.text, {}, loc_of(name)};
            locs.tasks.emplace_back();
            if (in.peek_is(TokenKind::Keyword, ":parameters"))
                parse_parameters(in, sig.parameters, locs.tasks.back());
            in.rparen();
            d.compound_tasks.push_back(std::move(sig));
        } else if (section.text == ":action") {
            locs.actions.emplace_back();
            d.actions.push_back(parse_action(in, locs.actions.back()));
        } else if (section.text == ":method") {
            locs.methods.emplace_back();
            d.methods.push_back(parse_method(in, locs.methods.back()));
        } else {
            throw SyntaxError(section.line, section.column,
                              "one of :requirements, :types, :constants, :predicates, :tasks, :method, :action",
                              describe(section));
        }
    }
    in.rparen();
    if (!in.at_end())
        in.fail("end of input");

    DomainChecker check(d);
    check.check_types(locs.type_parents);
    check.check_typed(d.constants, locs.constants, "constant");
    for (std::size_t i = 0; i < d.predicates.size(); ++i)
        check.check_typed(d.predicates[i].parameters, locs.predicates[i], "parameter");
    for (std::size_t i = 0; i < d.compound_tasks.size(); ++i)
        check.check_typed(d.compound_tasks[i].parameters, locs.tasks[i], "parameter");
    for (std::size_t i = 0; i < d.actions.size(); ++i)
        check.check_typed(d.actions[i].parameters, locs.actions[i], "parameter");
    for (std::size_t i = 0; i < d.methods.size(); ++i)
        check.check_typed(d.methods[i].parameters, locs.methods[i], "parameter");
    check.declare_constants();
    check.declare_signatures();
    for (const auto &a : d.actions)
        check.check_action(a);
    for (const auto &m : d.methods)
        check.check_method(m);
    return d;
}

LiftedProblemAst parse_problem(std::span<const Token> tokens, const LiftedDomainAst &domain) {
    Cursor in(tokens);
    LiftedProblemAst p;
    std::vector<SourceLoc> object_type_locs;

    in.lparen();
    in.ident("define");
    in.lparen();
    in.ident("problem");
    p.name = in.name("problem name").text;
    in.rparen();
    in.lparen();
    in.keyword(":domain");
    const Token &dname = in.name("domain name");
    p.domain_name = dname.text;
    in.rparen();
    if (p.domain_name != domain.name)
        throw DomainMismatch(dname.line, dname.column, domain.name, p.domain_name);

    bool seen_htn = false;
    while (!in.peek_is(TokenKind::RParen)) {
        in.lparen();
        const Token &section = in.expect(TokenKind::Keyword, "section keyword");
        if (section.text == ":requirements") {
            auto flags = parse_requirements(in);
            p.requirements.insert(p.requirements.end(), flags.begin(), flags.end());
        } else if (section.text == ":objects") {
            auto typed = parse_typed_list_locs(in, false);
            in.rparen();
            p.objects.insert(p.objects.end(), typed.names.begin(), typed.names.end());
            object_type_locs.insert(object_type_locs.end(), typed.type_locs.begin(), typed.type_locs.end());
        } else if (section.text == ":init") {
            while (!in.peek_is(TokenKind::RParen)) {
                in.lparen();
                if (in.peek_is(TokenKind::Ident, "not"))
                    in.fail("positive ground atom");
                p.init.push_back(parse_atom_body(in, "predicate name"));
            }
            in.rparen();
        } else if (section.text == ":htn") {
            if (seen_htn)
                throw SemanticError(section.line, section.column, "duplicate :htn section");
            seen_htn = true;
            bool seen_subtasks = false, seen_ordering = false;
            while (!in.peek_is(TokenKind::RParen)) {
                if (in.peek_is(TokenKind::Keyword, ":parameters")) {
                    const Token &kw = in.next();
                    in.lparen();
                    if (!in.peek_is(TokenKind::RParen))
                        throw SemanticError(kw.line, kw.column, "initial task network parameters are not supported");
                    in.rparen();
                } else if (!parse_network_keyword(in, p.initial_network, seen_subtasks, seen_ordering)) {
                    in.fail("':ordered-subtasks', ':subtasks', ':ordering' or ')'");
                }
            }
            in.rparen();
            if (p.initial_network.totally_ordered && !p.initial_network.ordering.empty())
                throw SemanticError(section.line, section.column, "ordered subtasks cannot carry an :ordering section");
        } else if (section.text == ":goal") {
            if (!in.empty_form())
                throw SemanticError(section.line, section.column, "state goals are not supported");
            in.rparen();
        } else {
            throw SyntaxError(section.line, section.column, "one of :requirements, :objects, :htn, :init, :goal",
                              describe(section));
        }
    }
    in.rparen();
    if (!in.at_end())
        in.fail("end of input");

    // Semantic checks against the domain.
    DomainChecker check(domain);
    std::vector<SourceLoc> parent_locs(domain.types.size());
    check.check_types(parent_locs);
    check.declare_constants();
    check.declare_signatures();
    check.check_typed(p.objects, object_type_locs, "object");
    std::unordered_set<std::string> objects;
    for (const auto &o : p.objects) {
        if (check.has_constant(o.name))
            throw SemanticError(o.loc.line, o.loc.column, "object '" + o.name + "' clashes with a domain constant");
        objects.insert(o.name);
    }
    check.set_extra_objects(&objects);
    for (const auto &atom : p.init) {
        for (const auto &t : atom.args)
            if (t.is_variable())
                throw SemanticError(t.loc.line, t.loc.column, "variable '" + t.text + "' in initial state");
        check.check_literal({atom, true}, nullptr, false);
        if (atom.name == "=")
            throw SemanticError(atom.loc.line, atom.loc.column, "equality atoms are not allowed in the initial state");
    }
    check.check_network(p.initial_network, nullptr);
    return p;
}

LiftedDomainAst parse_domain(std::string_view source) {
    const auto tokens = tokenize(source);
    return parse_domain(std::span<const Token>(tokens));
}

LiftedProblemAst parse_problem(std::string_view source, const LiftedDomainAst &domain) {
    const auto tokens = tokenize(source);
    return parse_problem(std::span<const Token>(tokens), domain);
}

// ---------------------------------------------------------------------------
// Unparsing

namespace {

void write_typed(std::ostream &out, const std::vector<TypedName> &names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out << ' ';
        out << names[i].name << " - " << names[i].type;
    }
}

void write_atom(std::ostream &out, const AtomAst &a) {
    out << '(' << a.name;
    for (const auto &t : a.args)
        out << ' ' << t.text;
    out << ')';
}

void write_condition(std::ostream &out, const std::vector<LiteralAst> &lits) {
    out << "(and";
    for (const auto &l : lits) {
        out << ' ';
        if (!l.positive)
            out << "(not ";
        write_atom(out, l.atom);
        if (!l.positive)
            out << ')';
    }
    out << ')';
}

void write_network(std::ostream &out, const TaskNetworkAst &n, const char *indent) {
    out << indent << (n.totally_ordered ? ":ordered-subtasks" : ":subtasks") << " (and";
    for (const auto &st : n.subtasks) {
        out << " (" << st.label << ' ';
        write_atom(out, st.task);
        out << ')';
    }
    out << ')';
    if (!n.ordering.empty()) {
        out << '\n' << indent << ":ordering (and";
        for (const auto &o : n.ordering)
            out << " (< " << o.before << ' ' << o.after << ')';
        out << ')';
    }
}

void write_requirements(std::ostream &out, const std::vector<std::string> &reqs) {
    if (reqs.empty())
        return;
    out << "  (:requirements";
    for (const auto &r : reqs)
        out << ' ' << r;
    out << ")\n";
}

}  // namespace

std::string unparse(const LiftedDomainAst &d) {
    std::ostringstream out;
    out << "(define (domain " << d.name << ")\n";
    write_requirements(out, d.requirements);
    if (!d.types.empty()) {
        out << "  (:types ";
        write_typed(out, d.types);
        out << ")\n";
    }
    if (!d.constants.empty()) {
        out << "  (:constants ";
        write_typed(out, d.constants);
        out << ")\n";
    }
    if (!d.predicates.empty()) {
        out << "  (:predicates";
        for (const auto &p : d.predicates) {
            out << "\n    (" << p.name;
            if (!p.parameters.empty())
                out << ' ';
            write_typed(out, p.parameters);
            out << ')';
        }
        out << ")\n";
    }
    if (!d.compound_tasks.empty()) {
        out << "  (:tasks";
        for (const auto &t : d.compound_tasks) {
            out << "\n    (" << t.name;
            if (!t.parameters.empty())
                out << ' ';
            write_typed(out, t.parameters);
            out << ')';
        }
        out << ")\n";
    }
    for (const auto &m : d.methods) {
        out << "  (:method " << m.name << "\n    :parameters (";
        write_typed(out, m.parameters);
        out << ")\n    :task ";
        write_atom(out, m.task);
        if (!m.precondition.empty()) {
            out << "\n    :precondition ";
            write_condition(out, m.precondition);
        }
        out << '\n';
        write_network(out, m.network, "    ");
        out << ")\n";
    }
    for (const auto &a : d.actions) {
        out << "  (:action " << a.name << "\n    :parameters (";
        write_typed(out, a.parameters);
        out << ')';
        if (!a.precondition.empty()) {
            out << "\n    :precondition ";
            write_condition(out, a.precondition);
        }
        if (!a.effect.empty()) {
            out << "\n    :effect ";
            write_condition(out, a.effect);
        }
        out << ")\n";
    }
    out << ")\n";
    return out.str();
}

std::string unparse(const LiftedProblemAst &p) {
    std::ostringstream out;
    out << "(define (problem " << p.name << ")\n  (:domain " << p.domain_name << ")\n";
    write_requirements(out, p.requirements);
    if (!p.objects.empty()) {
        out << "  (:objects ";
        write_typed(out, p.objects);
        out << ")\n";
    }
    out << "  (:htn\n";
    write_network(out, p.initial_network, "    ");
    out << ")\n  (:init";
    for (const auto &a : p.init) {
        out << ' ';
        write_atom(out, a);
    }
    out << "))\n";
    return out.str();
}

}  // namespace htn::hddl
