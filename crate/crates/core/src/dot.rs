//! Minimal Graphviz DOT writer. Output is byte-stable for equal input.

use std::fmt::Write;

/// Edge colors assigned to generators by position.
pub const PALETTE: [&str; 8] = [
    "orange",
    "purple",
    "blue",
    "red",
    "forestgreen",
    "brown",
    "cyan4",
    "magenta",
];

pub fn color(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()]
}

type Attrs = Vec<(String, String)>;

#[derive(Debug, Clone)]
pub struct DotGraph {
    name: String,
    directed: bool,
    nodes: Vec<(String, Attrs)>,
    edges: Vec<(usize, usize, Attrs)>,
}

impl DotGraph {
    pub fn new(name: &str, directed: bool) -> Self {
        DotGraph {
            name: name.to_string(),
            directed,
            nodes: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Adds a node labeled `label` and returns its index.
    pub fn node(&mut self, label: &str, attrs: &[(&str, &str)]) -> usize {
        let mut all = vec![("label".to_string(), label.to_string())];
        all.extend(attrs.iter().map(|(k, v)| (k.to_string(), v.to_string())));
        self.nodes.push((label.to_string(), all));
        self.nodes.len() - 1
    }

    pub fn edge(&mut self, from: usize, to: usize, attrs: &[(&str, &str)]) {
        self.edges.push((
            from,
            to,
            attrs
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        ));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let (kind, arrow) = if self.directed {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        writeln!(out, "{kind} {} {{", quote(&self.name)).unwrap();
        for (i, (_, attrs)) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [{}];", render_attrs(attrs)).unwrap();
        }
        for (a, b, attrs) in &self.edges {
            if attrs.is_empty() {
                writeln!(out, "  n{a} {arrow} n{b};").unwrap();
            } else {
                writeln!(out, "  n{a} {arrow} n{b} [{}];", render_attrs(attrs)).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

fn render_attrs(attrs: &[(String, String)]) -> String {
    attrs
        .iter()
        .map(|(k, v)| format!("{k}={}", quote(v)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            q.push('\\');
        }
        q.push(c);
    }
    q.push('"');
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_small_graph() {
        let mut g = DotGraph::new("t", true);
        let a = g.node("*", &[]);
        let b = g.node("z:0", &[("shape", "box")]);
        g.edge(a, b, &[("color", "purple")]);
        g.edge(a, a, &[]);
        assert_eq!(
            g.render(),
            "digraph \"t\" {\n  n0 [label=\"*\"];\n  n1 [label=\"z:0\", shape=\"box\"];\n  n0 -> n1 [color=\"purple\"];\n  n0 -> n0;\n}\n"
        );
    }

    #[test]
    fn quotes_are_escaped() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
