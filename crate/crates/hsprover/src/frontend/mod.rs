//! Typed clausal input, SZS output and the CLI driver.

pub mod cli;
pub mod lexer;
pub mod parser;
pub mod problem;
pub mod szs;

pub use parser::{parse_problem_file, parse_problem_text, ParseError, ParseOptions};
pub use problem::ProblemFile;
pub use szs::{status_line, status_of, SzsStatus};

#[cfg(test)]
mod tests {
    use super::parser::{parse_problem_text, ParseOptions};
    use crate::engine::Role;
    use crate::sym::{self, VarKind};
    use crate::term::TermClass;

    #[test]
    fn parses_declarations_and_builtin_atoms() {
        let text = r#"
            % f maps integers to integers
            tff(t1, type, f: $int > $int).
            tff(c1, axiom, $less($sum(1, f(1)), 3)).
        "#;
        let p = parse_problem_text(text, &ParseOptions::default()).unwrap();
        assert_eq!(p.clauses.len(), 1);
        let c = &p.clauses[0].clause;
        assert_eq!(c.literals.len(), 1);
        assert!(c.literals[0].positive);
        // 1 + f(1) < 3, encoded as an equation with the truth constant.
        let atom = &c.literals[0].lhs;
        assert_eq!(atom.top_op(), Some(sym::builtins().less));
        assert_eq!(atom.args()[1], crate::term::Term::int(3));
    }

    #[test]
    fn declaration_only_items_are_fine() {
        let text = "tff(t, type, f: $int > $int).";
        let p = parse_problem_text(text, &ParseOptions::default()).unwrap();
        assert!(p.clauses.is_empty());
        assert_eq!(p.declarations.len(), 1);
    }

    #[test]
    fn sort_errors_are_reported() {
        let text = r#"
            tff(t1, type, a: $i).
            tff(c2, axiom, $sum(a, 1) = 1).
        "#;
        let err = parse_problem_text(text, &ParseOptions::default()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("sort error") || msg.contains("ill-sorted"), "{msg}");
    }

    #[test]
    fn variable_kinds_follow_flag_and_markers() {
        let text = r#"
            tff(t1, type, p: $int > $o).
            tff(c1, axiom, p(X) | p(?Y) | p(^Z)).
        "#;
        let opts = ParseOptions {
            int_var_kind: VarKind::Abstraction,
            ..ParseOptions::default()
        };
        let p = parse_problem_text(text, &opts).unwrap();
        let c = &p.clauses[0].clause;
        let kind_of = |i: usize| c.literals[i].lhs.args()[0].as_var().unwrap().kind;
        assert_eq!(kind_of(0), VarKind::Abstraction);
        assert_eq!(kind_of(1), VarKind::Ordinary);
        assert_eq!(kind_of(2), VarKind::Abstraction);

        let opts = ParseOptions {
            int_var_kind: VarKind::Ordinary,
            ..ParseOptions::default()
        };
        let p = parse_problem_text(text, &opts).unwrap();
        let c = &p.clauses[0].clause;
        let kind_of = |i: usize| c.literals[i].lhs.args()[0].as_var().unwrap().kind;
        assert_eq!(kind_of(0), VarKind::Ordinary);
        assert_eq!(kind_of(2), VarKind::Abstraction);
    }

    #[test]
    fn parameters_are_background_constants() {
        let text = r#"
            tff(t1, type, alpha: $int, parameter).
            tff(t2, type, c: $int).
            tff(c1, axiom, alpha = c).
        "#;
        let p = parse_problem_text(text, &ParseOptions::default()).unwrap();
        let lit = &p.clauses[0].clause.literals[0];
        assert_eq!(lit.lhs.class(), TermClass::PureBg);
        assert!(lit.lhs.is_parameter());
        assert_eq!(lit.rhs.class(), TermClass::Foreground);
    }

    #[test]
    fn roles_and_negated_conjecture() {
        let text = r#"
            tff(t1, type, p: $int > $o).
            tff(c1, axiom, p(0)).
            tff(c2, negated_conjecture, ~p(0)).
        "#;
        let p = parse_problem_text(text, &ParseOptions::default()).unwrap();
        assert_eq!(p.clauses[0].role, Role::Axiom);
        assert_eq!(p.clauses[1].role, Role::NegatedConjecture);
        assert!(!p.clauses[1].clause.literals[0].positive);
    }

    #[test]
    fn print_parse_round_trip() {
        let text = r#"
            tff(s1, type, data: $tType).
            tff(t1, type, f: ($int * data) > $int).
            tff(t2, type, d: data).
            tff(t3, type, p: data > $o).
            tff(t4, type, alpha: $int, parameter).
            tff(c1, axiom, ! [X: $int, Y: data] : (f(X, Y) = alpha | ~p(Y))).
            tff(c2, hypothesis, $lesseq(f(2, d), $uminus(3)) | $greater(alpha, 1)).
            tff(c3, negated_conjecture, p(d) | 1 = -1).
        "#;
        let opts = ParseOptions::default();
        let p1 = parse_problem_text(text, &opts).unwrap();
        let rendered = p1.render();
        let p2 = parse_problem_text(&rendered, &opts).unwrap();
        assert_eq!(rendered, p2.render(), "rendering must be a fixpoint");
        assert_eq!(p1.clauses.len(), p2.clauses.len());
        for (a, b) in p1.clauses.iter().zip(&p2.clauses) {
            assert_eq!(a.role, b.role);
            assert!(
                a.clause.alpha_eq_multiset(&b.clause),
                "round trip changed clause {} vs {}",
                a.clause,
                b.clause
            );
        }
    }

    #[test]
    fn undeclared_symbols_are_rejected() {
        let err = parse_problem_text("tff(c1, axiom, q(1)).", &ParseOptions::default())
            .unwrap_err();
        assert!(err.to_string().contains("undeclared"), "{err}");
    }
}
