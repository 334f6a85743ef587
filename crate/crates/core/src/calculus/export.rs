//! Serialization of derivations: JSON trees, LaTeX proof trees and plain text.

use serde::{Deserialize, Serialize};

use super::derivation::Derivation;
use super::rules::RuleLabel;
use crate::parse::{parse_sequent, ParseError};
use crate::term::{Formula, Sequent, Structure};

#[derive(Debug, Serialize, Deserialize)]
struct Node {
    rule: String,
    conclusion: String,
    premises: Vec<Node>,
}

#[derive(Debug, thiserror::Error)]
pub enum ExportError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("node {path}: {source}")]
    Rule { path: String, source: super::rules::UnknownRule },
    #[error("node {path}: bad conclusion: {source}")]
    Sequent { path: String, source: ParseError },
}

fn to_node(d: &Derivation) -> Node {
    Node {
        rule: d.rule.name().to_string(),
        conclusion: d.conclusion.to_string(),
        premises: d.premises.iter().map(to_node).collect(),
    }
}

fn from_node(n: &Node, path: &mut Vec<usize>) -> Result<Derivation, ExportError> {
    let here = || {
        std::iter::once("root".to_string()).chain(path.iter().map(|i| i.to_string())).collect::<Vec<_>>().join(".")
    };
    let rule: RuleLabel = n.rule.parse().map_err(|source| ExportError::Rule { path: here(), source })?;
    let conclusion = parse_sequent(&n.conclusion).map_err(|source| ExportError::Sequent { path: here(), source })?;
    let mut premises = Vec::with_capacity(n.premises.len());
    for (i, p) in n.premises.iter().enumerate() {
        path.push(i);
        premises.push(from_node(p, path)?);
        path.pop();
    }
    Ok(Derivation { conclusion, rule, premises })
}

pub fn to_json(d: &Derivation) -> String {
    let node = to_node(d);
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::pretty(&mut buf);
    node.serialize(&mut ser).expect("serializing to memory");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

pub fn from_json(text: &str) -> Result<Derivation, ExportError> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let node = Node::deserialize(&mut de)?;
    de.end()?;
    from_node(&node, &mut Vec::new())
}

fn latex_formula(f: &Formula, nested: bool, out: &mut String) {
    match f {
        Formula::Atom(a) => out.push_str(a.name()),
        Formula::Binary(op, l, r) => {
            if nested {
                out.push('(');
            }
            latex_formula(l, true, out);
            out.push(' ');
            out.push_str(op.latex());
            out.push(' ');
            latex_formula(r, true, out);
            if nested {
                out.push(')');
            }
        }
    }
}

fn latex_structure(s: &Structure, nested: bool, out: &mut String) {
    match s {
        Structure::Leaf(f, _) => latex_formula(f, nested, out),
        Structure::Node(op, l, r) => {
            if nested {
                out.push('(');
            }
            latex_structure(l, true, out);
            out.push_str(" \\cdot{");
            out.push_str(op.latex());
            out.push_str("}\\cdot ");
            latex_structure(r, true, out);
            if nested {
                out.push(')');
            }
        }
    }
}

pub fn latex_sequent(s: &Sequent) -> String {
    let mut out = String::new();
    latex_structure(&s.lhs, false, &mut out);
    out.push_str(" \\vdash ");
    latex_structure(&s.rhs, false, &mut out);
    out
}

/// Nested `\infer` macros (proof.sty), one per rule node.
pub fn to_latex(d: &Derivation) -> String {
    let mut out = String::new();
    write_latex(d, 0, &mut out);
    out.push('\n');
    out
}

fn write_latex(d: &Derivation, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    out.push_str(&pad);
    out.push_str(&format!("\\infer[{}]{{{}}}{{", d.rule.latex_name(), latex_sequent(&d.conclusion)));
    if d.premises.is_empty() {
        out.push('}');
        return;
    }
    out.push('\n');
    for (i, p) in d.premises.iter().enumerate() {
        if i > 0 {
            out.push_str(&format!("\n{pad}  &\n"));
        }
        write_latex(p, indent + 1, out);
    }
    out.push('\n');
    out.push_str(&pad);
    out.push('}');
}

/// Indented outline, conclusion first.
pub fn to_text(d: &Derivation) -> String {
    let mut out = String::new();
    write_text(d, 0, &mut out);
    out
}

fn write_text(d: &Derivation, indent: usize, out: &mut String) {
    out.push_str(&"  ".repeat(indent));
    out.push_str(&format!("{}   [{}]\n", d.conclusion, d.rule));
    for p in &d.premises {
        write_text(p, indent + 1, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_formula;

    fn sample() -> Derivation {
        let a = parse_formula("a").unwrap();
        let b = parse_formula("b").unwrap();
        let tensor = Derivation::new(
            parse_sequent("a .*. b |- a * b").unwrap(),
            RuleLabel::TensorR,
            vec![Derivation::axiom(&a), Derivation::axiom(&b)],
        );
        Derivation::new(parse_sequent("a * b |- a * b").unwrap(), RuleLabel::TensorL, vec![tensor])
    }

    #[test]
    fn json_round_trip() {
        let d = sample();
        let text = to_json(&d);
        assert!(text.contains("\"rule\": \"TensorL\""));
        assert_eq!(from_json(&text).unwrap(), d);
    }

    #[test]
    fn json_errors_carry_path() {
        let text = r#"{"rule":"TensorL","conclusion":"a * b |- a * b","premises":[{"rule":"Bogus","conclusion":"a |- a","premises":[]}]}"#;
        match from_json(text) {
            Err(ExportError::Rule { path, .. }) => assert_eq!(path, "root.0"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(from_json("{"), Err(ExportError::Json(_))));
    }

    #[test]
    fn latex_uses_conventional_names() {
        let tex = to_latex(&sample());
        assert!(tex.starts_with("\\infer[\\otimes L]{a \\otimes b \\vdash a \\otimes b}"));
        assert!(tex.contains("\\infer[Ax]{a \\vdash a}{}"));
        assert!(tex.contains("a \\cdot{\\otimes}\\cdot b"));
    }

    #[test]
    fn text_outline() {
        let t = to_text(&sample());
        assert_eq!(t.lines().count(), 4);
        assert!(t.starts_with("a * b |- a * b   [TensorL]"));
    }
}
