#include "normkit/dsl.hpp"

#include "normkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace normkit {

const SignatureDecl* TheoryDocument::find_signature(const std::string& name) const {
    for (const auto& d : signatures)
        if (d.name == name) return &d;
    return nullptr;
}

const TheoryDecl* TheoryDocument::find_theory(const std::string& name) const {
    for (const auto& d : theories)
        if (d.name == name) return &d;
    return nullptr;
}

const ModelDecl* TheoryDocument::find_model(const std::string& name) const {
    for (const auto& d : models)
        if (d.name == name) return &d;
    return nullptr;
}

const PrenormDecl* TheoryDocument::find_prenorm(const std::string& name) const {
    for (const auto& d : prenorms)
        if (d.name == name) return &d;
    return nullptr;
}

namespace {

struct Token {
    enum class Kind { ident, number, punct, end };
    Kind kind = Kind::end;
    std::string text;
    std::size_t line = 1;
    std::size_t col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space();
        current_ = {Token::Kind::end, "", line_, col_};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            current_.kind = Token::Kind::ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                current_.text += take();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            current_.kind = Token::Kind::number;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                current_.text += take();
            return;
        }
        current_.kind = Token::Kind::punct;
        if (starts_with("->") || starts_with("/\\") || starts_with("\\/")) {
            current_.text += take();
            current_.text += take();
            return;
        }
        static const std::string singles = "{}(),;:=.~";
        if (singles.find(c) != std::string::npos) {
            current_.text += take();
            return;
        }
        throw Error(errc::syntax_error, "line " + std::to_string(line_) + ", col " +
                                            std::to_string(col_) + ": unexpected character '" +
                                            std::string(1, c) + "'");
    }

    bool starts_with(const char* s) const { return text_.compare(pos_, 2, s) == 0; }

    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
    Token current_;
};

[[noreturn]] void fail(const Token& at, const std::string& expected) {
    throw Error(errc::syntax_error, "line " + std::to_string(at.line) + ", col " +
                                        std::to_string(at.col) + ": expected " + expected +
                                        ", found '" +
                                        (at.kind == Token::Kind::end ? "<end>" : at.text) + "'");
}

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) {}

    TheoryDocument parse() {
        TheoryDocument doc;
        while (lexer_.peek().kind != Token::Kind::end) {
            const Token head = lexer_.peek();
            if (head.text == "signature")
                parse_signature(doc);
            else if (head.text == "theory")
                parse_theory(doc);
            else if (head.text == "model")
                parse_model(doc);
            else if (head.text == "prenorm")
                parse_prenorm(doc);
            else
                fail(head, "'signature', 'theory', 'model' or 'prenorm'");
        }
        return doc;
    }

private:
    Lexer lexer_;

    Token expect_punct(const std::string& text) {
        if (lexer_.peek().kind != Token::Kind::punct || lexer_.peek().text != text)
            fail(lexer_.peek(), "'" + text + "'");
        return lexer_.next();
    }

    void expect_keyword(const std::string& word) {
        if (lexer_.peek().kind != Token::Kind::ident || lexer_.peek().text != word)
            fail(lexer_.peek(), "'" + word + "'");
        lexer_.next();
    }

    bool at_keyword(const std::string& word) const {
        return lexer_.peek().kind == Token::Kind::ident && lexer_.peek().text == word;
    }

    bool at_punct(const std::string& text) const {
        return lexer_.peek().kind == Token::Kind::punct && lexer_.peek().text == text;
    }

    std::string expect_ident() {
        if (lexer_.peek().kind != Token::Kind::ident) fail(lexer_.peek(), "an identifier");
        return lexer_.next().text;
    }

    std::string expect_label() {
        if (lexer_.peek().kind != Token::Kind::ident && lexer_.peek().kind != Token::Kind::number)
            fail(lexer_.peek(), "an element label");
        return lexer_.next().text;
    }

    std::size_t expect_number() {
        if (lexer_.peek().kind != Token::Kind::number) fail(lexer_.peek(), "a number");
        return static_cast<std::size_t>(std::stoull(lexer_.next().text));
    }

    void parse_signature(TheoryDocument& doc) {
        expect_keyword("signature");
        const std::string name = expect_ident();
        if (doc.find_signature(name))
            throw Error(errc::duplicate_name, "signature '" + name + "' declared twice");
        expect_punct("{");
        std::vector<std::pair<std::string, std::size_t>> fns, rels;
        std::vector<std::pair<std::string, std::string>> pairing;
        while (!at_punct("}")) {
            if (at_keyword("fn")) {
                lexer_.next();
                const std::string fname = expect_ident();
                fns.emplace_back(fname, expect_number());
            } else if (at_keyword("rel")) {
                lexer_.next();
                const std::string rname = expect_ident();
                rels.emplace_back(rname, expect_number());
            } else if (at_keyword("pair")) {
                lexer_.next();
                const std::string fname = expect_ident();
                pairing.emplace_back(fname, expect_ident());
            } else {
                fail(lexer_.peek(), "'fn', 'rel', 'pair' or '}'");
            }
            expect_punct(";");
        }
        expect_punct("}");
        doc.signatures.push_back({name, make_signature(fns, rels, pairing)});
    }

    Term parse_term(const std::vector<std::string>& vars) {
        const std::string name = expect_ident();
        if (at_punct("(")) {
            lexer_.next();
            std::vector<Term> args;
            if (!at_punct(")")) {
                args.push_back(parse_term(vars));
                while (at_punct(",")) {
                    lexer_.next();
                    args.push_back(parse_term(vars));
                }
            }
            expect_punct(")");
            return Term::apply(name, std::move(args));
        }
        if (std::find(vars.begin(), vars.end(), name) != vars.end()) return Term::var(name);
        return Term::apply(name); // bare constant; validated against the signature later
    }

    Formula parse_atom(const Signature& sig, const std::vector<std::string>& vars) {
        if (at_punct("(")) {
            lexer_.next();
            Formula inner = parse_formula(sig, vars);
            expect_punct(")");
            return inner;
        }
        const Token head = lexer_.peek();
        Term first = parse_term(vars);
        if (at_punct("=")) {
            lexer_.next();
            return Formula::equal(std::move(first), parse_term(vars));
        }
        if (first.kind == Term::Kind::apply && sig.find_relation(first.name))
            return Formula::rel_atom(first.name, std::move(first.args));
        fail(head, "an equality or a relation atom");
    }

    Formula parse_unary(const Signature& sig, const std::vector<std::string>& vars) {
        if (at_punct("~")) {
            lexer_.next();
            return Formula::neg(parse_unary(sig, vars));
        }
        return parse_atom(sig, vars);
    }

    Formula parse_conj(const Signature& sig, const std::vector<std::string>& vars) {
        Formula left = parse_unary(sig, vars);
        while (at_punct("/\\")) {
            lexer_.next();
            left = Formula::conj(std::move(left), parse_unary(sig, vars));
        }
        return left;
    }

    Formula parse_disj(const Signature& sig, const std::vector<std::string>& vars) {
        Formula left = parse_conj(sig, vars);
        while (at_punct("\\/")) {
            lexer_.next();
            left = Formula::disj(std::move(left), parse_conj(sig, vars));
        }
        return left;
    }

    Formula parse_formula(const Signature& sig, const std::vector<std::string>& vars) {
        Formula left = parse_disj(sig, vars);
        if (at_punct("->")) {
            lexer_.next();
            return Formula::implies(std::move(left), parse_formula(sig, vars));
        }
        return left;
    }

    void parse_theory(TheoryDocument& doc) {
        expect_keyword("theory");
        const std::string name = expect_ident();
        if (doc.find_theory(name))
            throw Error(errc::duplicate_name, "theory '" + name + "' declared twice");
        expect_keyword("over");
        const std::string sig_name = expect_ident();
        const SignatureDecl* sig = doc.find_signature(sig_name);
        if (!sig)
            throw Error(errc::unresolved_reference, "theory '" + name +
                                                        "' refers to undeclared signature '" +
                                                        sig_name + "'");
        expect_punct("{");
        expect_keyword("vars");
        std::vector<std::string> vars;
        if (!at_punct(";")) {
            vars.push_back(expect_ident());
            while (at_punct(",")) {
                lexer_.next();
                vars.push_back(expect_ident());
            }
        }
        expect_punct(";");
        std::vector<NamedAxiom> axioms;
        while (at_keyword("axiom")) {
            lexer_.next();
            const std::string axiom_name = expect_ident();
            expect_punct(":");
            expect_keyword("forall");
            std::vector<std::string> prefix;
            if (!at_punct(".")) {
                prefix.push_back(expect_ident());
                while (at_punct(",")) {
                    lexer_.next();
                    prefix.push_back(expect_ident());
                }
            }
            expect_punct(".");
            Formula matrix = parse_formula(sig->signature, prefix);
            expect_punct(";");
            axioms.push_back({axiom_name, {std::move(prefix), std::move(matrix)}});
        }
        expect_punct("}");
        doc.theories.push_back({name, sig_name, make_theory(vars, sig->signature, axioms)});
    }

    void parse_model(TheoryDocument& doc) {
        expect_keyword("model");
        const std::string name = expect_ident();
        if (doc.find_model(name))
            throw Error(errc::duplicate_name, "model '" + name + "' declared twice");
        expect_keyword("of");
        const std::string theory_name = expect_ident();
        const TheoryDecl* theory = doc.find_theory(theory_name);
        if (!theory)
            throw Error(errc::unresolved_reference, "model '" + name +
                                                        "' refers to undeclared theory '" +
                                                        theory_name + "'");
        expect_punct("{");
        expect_keyword("carrier");
        FiniteStructure structure;
        structure.signature = theory->theory.signature;
        if (!at_punct(";")) {
            structure.carrier.elements.push_back(expect_label());
            while (at_punct(",")) {
                lexer_.next();
                structure.carrier.elements.push_back(expect_label());
            }
        }
        expect_punct(";");
        const std::size_t n = structure.carrier.size();

        while (at_keyword("fn") || at_keyword("rel")) {
            if (at_keyword("fn")) {
                lexer_.next();
                const Token at = lexer_.peek();
                const std::string fname = expect_ident();
                const Symbol* sym = structure.signature.find_function(fname);
                if (!sym)
                    throw Error(errc::unknown_symbol, "line " + std::to_string(at.line) +
                                                          ": unknown function symbol '" + fname +
                                                          "'");
                expect_keyword("map");
                parse_fn_table(structure, *sym);
            } else {
                lexer_.next();
                const Token at = lexer_.peek();
                const std::string rname = expect_ident();
                const Symbol* sym = structure.signature.find_relation(rname);
                if (!sym)
                    throw Error(errc::unknown_symbol, "line " + std::to_string(at.line) +
                                                          ": unknown relation symbol '" + rname +
                                                          "'");
                expect_punct("=");
                structure.rel_tables[rname] = parse_rel_table(structure, *sym);
            }
            expect_punct(";");
        }
        expect_punct("}");
        (void)n;
        doc.models.push_back({name, theory_name, make_model(theory->theory, structure)});
    }

    std::size_t resolve_label(const FiniteCarrier& carrier, const Token& at,
                              const std::string& label) {
        for (std::size_t i = 0; i < carrier.elements.size(); ++i)
            if (carrier.elements[i] == label) return i;
        throw Error(errc::unknown_symbol, "line " + std::to_string(at.line) +
                                              ": label '" + label +
                                              "' is not a carrier element");
    }

    std::size_t parse_element(const FiniteCarrier& carrier) {
        const Token at = lexer_.peek();
        return resolve_label(carrier, at, expect_label());
    }

    void parse_fn_table(FiniteStructure& structure, const Symbol& sym) {
        const std::size_t n = structure.carrier.size();
        std::size_t rows = 1;
        for (std::size_t i = 0; i < sym.arity; ++i) rows *= n;
        std::vector<std::size_t> table(rows, 0);
        std::vector<bool> seen(rows, false);
        while (at_punct("(")) {
            lexer_.next();
            Tuple args;
            if (!at_punct(")")) {
                args.push_back(parse_element(structure.carrier));
                while (at_punct(",")) {
                    lexer_.next();
                    args.push_back(parse_element(structure.carrier));
                }
            }
            const Token close = lexer_.peek();
            expect_punct(")");
            if (args.size() != sym.arity)
                throw Error(errc::arity_error, "line " + std::to_string(close.line) +
                                                   ": '" + sym.name + "' expects " +
                                                   std::to_string(sym.arity) + " arguments");
            expect_punct("->");
            std::size_t index = 0;
            for (const std::size_t a : args) index = index * n + a;
            table[index] = parse_element(structure.carrier);
            seen[index] = true;
            if (!at_punct(",")) break;
            lexer_.next();
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw Error(errc::model_invalid,
                        "function table for '" + sym.name + "' is not total");
        structure.fn_tables[sym.name] = std::move(table);
    }

    RelTable parse_rel_table(FiniteStructure& structure, const Symbol& sym) {
        if (at_keyword("equality")) {
            lexer_.next();
            if (sym.arity != 2)
                throw Error(errc::not_binary, "'equality' requires a binary relation");
            return diagonal_relation(structure.carrier.size());
        }
        if (at_keyword("chain")) {
            lexer_.next();
            if (sym.arity != 2)
                throw Error(errc::not_binary, "'chain' requires a binary relation");
            expect_punct("(");
            std::vector<std::size_t> chain;
            if (!at_punct(")")) {
                chain.push_back(parse_element(structure.carrier));
                while (at_punct(",")) {
                    lexer_.next();
                    chain.push_back(parse_element(structure.carrier));
                }
            }
            expect_punct(")");
            return chain_relation(chain);
        }
        expect_punct("{");
        RelTable table;
        while (at_punct("(")) {
            lexer_.next();
            Tuple tuple;
            if (!at_punct(")")) {
                tuple.push_back(parse_element(structure.carrier));
                while (at_punct(",")) {
                    lexer_.next();
                    tuple.push_back(parse_element(structure.carrier));
                }
            }
            const Token close = lexer_.peek();
            expect_punct(")");
            if (tuple.size() != sym.arity)
                throw Error(errc::arity_error, "line " + std::to_string(close.line) +
                                                   ": '" + sym.name + "' tuples need " +
                                                   std::to_string(sym.arity) + " entries");
            table.insert(std::move(tuple));
            if (!at_punct(",")) break;
            lexer_.next();
        }
        expect_punct("}");
        return table;
    }

    void parse_prenorm(TheoryDocument& doc) {
        expect_keyword("prenorm");
        const std::string name = expect_ident();
        if (doc.find_prenorm(name))
            throw Error(errc::duplicate_name, "prenorm '" + name + "' declared twice");
        expect_keyword("from");
        const std::string from = expect_ident();
        expect_keyword("to");
        const std::string to = expect_ident();
        const ModelDecl* source = doc.find_model(from);
        const ModelDecl* target = doc.find_model(to);
        if (!source || !target)
            throw Error(errc::unresolved_reference,
                        "prenorm '" + name + "' refers to an undeclared model");
        expect_punct("{");

        expect_keyword("sighom");
        std::map<std::string, std::string> alpha_map;
        while (!at_punct(";")) {
            const std::string symbol = expect_ident();
            expect_punct("->");
            alpha_map[symbol] = expect_ident();
            if (!at_punct(",")) break;
            lexer_.next();
        }
        expect_punct(";");

        expect_keyword("map");
        const FiniteCarrier& src_carrier = source->model.structure.carrier;
        CarrierMap phi(src_carrier.size(), SIZE_MAX);
        while (!at_punct(";")) {
            const std::size_t a = parse_element(src_carrier);
            expect_punct("->");
            phi[a] = parse_element(target->model.structure.carrier);
            if (!at_punct(",")) break;
            lexer_.next();
        }
        expect_punct(";");
        expect_punct("}");
        if (std::find(phi.begin(), phi.end(), SIZE_MAX) != phi.end())
            throw Error(errc::phi_not_total,
                        "prenorm '" + name + "' does not map every source element");

        const SignatureHom alpha = check_signature_hom(alpha_map, source->model.structure.signature,
                                                       target->model.structure.signature);
        doc.prenorms.push_back(
            {name, from, to, make_prenorm(source->model, target->model, alpha, phi)});
    }
};

void print_term(std::ostringstream& out, const Term& term) {
    out << term.name;
    if (term.kind == Term::Kind::apply) {
        out << "(";
        for (std::size_t i = 0; i < term.args.size(); ++i) {
            if (i) out << ", ";
            print_term(out, term.args[i]);
        }
        out << ")";
    }
}

void print_matrix(std::ostringstream& out, const Formula& f, bool parenthesize) {
    switch (f.kind) {
    case Formula::Kind::equal:
        print_term(out, f.terms[0]);
        out << " = ";
        print_term(out, f.terms[1]);
        return;
    case Formula::Kind::rel_atom: {
        out << f.rel << "(";
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
            if (i) out << ", ";
            print_term(out, f.terms[i]);
        }
        out << ")";
        return;
    }
    case Formula::Kind::neg:
        out << "~";
        print_matrix(out, f.sub[0], true);
        return;
    default: {
        const char* op = f.kind == Formula::Kind::conj   ? " /\\ "
                         : f.kind == Formula::Kind::disj ? " \\/ "
                                                         : " -> ";
        if (parenthesize) out << "(";
        print_matrix(out, f.sub[0], true);
        out << op;
        print_matrix(out, f.sub[1], true);
        if (parenthesize) out << ")";
        return;
    }
    }
}

template <typename Seq, typename Fn>
void print_joined(std::ostringstream& out, const Seq& seq, Fn item) {
    bool first = true;
    for (const auto& x : seq) {
        if (!first) out << ", ";
        first = false;
        item(x);
    }
}

} // namespace

std::string print_formula(const ClosedFormula& formula) {
    std::ostringstream out;
    out << "forall ";
    bool first = true;
    for (const std::string& v : formula.vars) {
        if (!first) out << ", ";
        first = false;
        out << v;
    }
    if (!formula.vars.empty()) out << " ";
    out << ". ";
    print_matrix(out, formula.matrix, false);
    return out.str();
}

TheoryDocument parse_document(const std::string& text) { return Parser(text).parse(); }

std::string print_document(const TheoryDocument& document) {
    std::ostringstream out;
    for (const SignatureDecl& decl : document.signatures) {
        out << "signature " << decl.name << " {\n";
        for (const Symbol& fn : decl.signature.functions)
            out << "  fn " << fn.name << " " << fn.arity << ";\n";
        for (const Symbol& rel : decl.signature.relations)
            out << "  rel " << rel.name << " " << rel.arity << ";\n";
        for (const Symbol& fn : decl.signature.functions) {
            auto it = decl.signature.pairing.find(fn.name);
            if (it != decl.signature.pairing.end())
                out << "  pair " << it->first << " " << it->second << ";\n";
        }
        out << "}\n\n";
    }
    for (const TheoryDecl& decl : document.theories) {
        out << "theory " << decl.name << " over " << decl.signature_name << " {\n";
        out << "  vars ";
        print_joined(out, decl.theory.variables, [&](const std::string& v) { out << v; });
        out << ";\n";
        for (const NamedAxiom& axiom : decl.theory.axioms)
            out << "  axiom " << axiom.name << ": " << print_formula(axiom.formula) << ";\n";
        out << "}\n\n";
    }
    for (const ModelDecl& decl : document.models) {
        const FiniteStructure& s = decl.model.structure;
        out << "model " << decl.name << " of " << decl.theory_name << " {\n";
        out << "  carrier ";
        print_joined(out, s.carrier.elements, [&](const std::string& e) { out << e; });
        out << ";\n";
        const std::size_t n = s.carrier.size();
        for (const Symbol& fn : s.signature.functions) {
            out << "  fn " << fn.name << " map ";
            const auto& table = s.fn_tables.at(fn.name);
            for (std::size_t index = 0; index < table.size(); ++index) {
                if (index) out << ", ";
                out << "(";
                std::size_t rest = index;
                Tuple args(fn.arity, 0);
                for (std::size_t i = fn.arity; i > 0; --i) {
                    args[i - 1] = rest % n;
                    rest /= n;
                }
                print_joined(out, args, [&](std::size_t a) { out << s.carrier.elements[a]; });
                out << ") -> " << s.carrier.elements[table[index]];
            }
            out << ";\n";
        }
        for (const Symbol& rel : s.signature.relations) {
            out << "  rel " << rel.name << " = { ";
            print_joined(out, s.rel_tables.at(rel.name), [&](const Tuple& t) {
                out << "(";
                print_joined(out, t, [&](std::size_t a) { out << s.carrier.elements[a]; });
                out << ")";
            });
            out << " };\n";
        }
        out << "}\n\n";
    }
    for (const PrenormDecl& decl : document.prenorms) {
        out << "prenorm " << decl.name << " from " << decl.from << " to " << decl.to << " {\n";
        out << "  sighom ";
        print_joined(out, decl.prenorm.alpha.map, [&](const auto& entry) {
            out << entry.first << " -> " << entry.second;
        });
        out << ";\n";
        out << "  map ";
        const auto& src = decl.prenorm.source.structure.carrier.elements;
        const auto& trg = decl.prenorm.target.structure.carrier.elements;
        for (std::size_t a = 0; a < decl.prenorm.phi.size(); ++a) {
            if (a) out << ", ";
            out << src[a] << " -> " << trg[decl.prenorm.phi[a]];
        }
        out << ";\n}\n\n";
    }
    return out.str();
}

} // namespace normkit
