use std::fmt::Write;

use super::BeliefNetwork;

fn dot_id(name: &str) -> String {
    let plain = !name.is_empty()
        && !name.starts_with(|c: char| c.is_ascii_digit())
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if plain {
        name.to_string()
    } else {
        format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Renders a DOT digraph from node names and `(from, to)` name pairs.
pub(crate) fn render<'a>(
    nodes: impl IntoIterator<Item = &'a str>,
    edges: impl IntoIterator<Item = (&'a str, &'a str)>,
) -> String {
    let mut out = String::from("digraph G {\n");
    for n in nodes {
        let _ = writeln!(out, "  {};", dot_id(n));
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  {} -> {};", dot_id(a), dot_id(b));
    }
    out.push_str("}\n");
    out
}

impl BeliefNetwork {
    /// DOT digraph with nodes in universe order and edges sorted by
    /// (parent, child).
    pub fn to_dot(&self) -> String {
        let u = self.universe();
        let edges = self.edges();
        render(
            u.names().iter().map(String::as_str),
            edges.iter().map(|e| (u.name(e.from), u.name(e.to))),
        )
    }
}

#[cfg(test)]
mod tests {
    use crate::network::dsep::tests::net;

    #[test]
    fn dot_lists_nodes_then_edges() {
        let n = net(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]);
        assert_eq!(
            n.to_dot(),
            "digraph G {\n  a;\n  b;\n  c;\n  d;\n  a -> b;\n  c -> d;\n}\n"
        );
    }

    #[test]
    fn single_node_and_quoting() {
        let n = net(&["a"], &[]);
        assert_eq!(n.to_dot(), "digraph G {\n  a;\n}\n");
        let q = net(&["x 1", "2y"], &[("x 1", "2y")]);
        assert!(q.to_dot().contains("\"x 1\" -> \"2y\";"));
    }
}
