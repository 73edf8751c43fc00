#![allow(dead_code)]

use graphoids::distributions::TabularDistribution;
use graphoids::graphoid::DEFAULT_CLOSURE_CAP;
use graphoids::simnet::SimilarityGraph;
use graphoids::{DependencyModel, Triplet, Universe, VarSet};

/// Closure of `I({a,b}, {c,d}; ∅)` over `a..d`.
pub fn m1() -> DependencyModel {
    let u = Universe::letters(4).unwrap();
    let seed = Triplet::new(u.set(&["a", "b"]).unwrap(), u.set(&["c", "d"]).unwrap(), VarSet::EMPTY).unwrap();
    DependencyModel::from_statements(u, [seed])
        .unwrap()
        .close(DEFAULT_CLOSURE_CAP)
        .unwrap()
}

/// Weight of a binary child given whether its condition holds. Both rows are
/// positive and differ, so the dependence is real.
fn factor(condition: bool, s: usize) -> u64 {
    match (condition, s) {
        (true, 1) => 5,
        (true, _) => 1,
        (false, 1) => 2,
        (false, _) => 3,
    }
}

fn binary() -> Vec<String> {
    vec!["0".into(), "1".into()]
}

fn hypothesis(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("h{i}")).collect()
}

fn chain_graph(k: usize) -> SimilarityGraph {
    let values = hypothesis(k);
    SimilarityGraph {
        hypothesis: "h".into(),
        edges: values.windows(2).map(|w| [w[0].clone(), w[1].clone()]).collect(),
        values,
    }
}

fn dist(k: usize, symptoms: usize, weight: impl Fn(&[usize]) -> u64) -> TabularDistribution {
    let mut names = vec!["h".to_string()];
    names.extend((1..=symptoms).map(|i| format!("s{i}")));
    let mut domains = vec![hypothesis(k)];
    domains.extend((0..symptoms).map(|_| binary()));
    TabularDistribution::from_fn(Universe::new(names).unwrap(), domains, weight).unwrap()
}

/// Five strictly positive fixtures with a hypothesis of three or four values
/// and three to five binary symptoms.
pub fn simnet_fixtures() -> Vec<(&'static str, TabularDistribution, SimilarityGraph)> {
    let mut out = Vec::new();

    // s1 separates every value, s2 only h3 from the rest, s3 is noise
    out.push((
        "three values, graded symptom",
        dist(3, 3, |d| {
            let (h, s1, s2, s3) = (d[0], d[1], d[2], d[3]);
            let w1 = [[1, 4], [2, 3], [4, 1]][h][s1];
            w1 * factor(h == 2, s2) * (1 + s3 as u64)
        }),
        chain_graph(3),
    ));

    // s2 hears about h only through s1; s3 marks {h1, h2}; s4 is noise
    out.push((
        "four values, mediated symptom",
        dist(4, 4, |d| {
            let (h, s1, s2, s3, s4) = (d[0], d[1], d[2], d[3], d[4]);
            factor(h % 2 == 0, s1) * factor(s1 == 1, s2) * factor(h < 2, s3) * (2 + s4 as u64)
        }),
        SimilarityGraph {
            hypothesis: "h".into(),
            values: hypothesis(4),
            edges: vec![
                ["h1".into(), "h2".into()],
                ["h1".into(), "h3".into()],
                ["h3".into(), "h4".into()],
            ],
        },
    ));

    // {s1, s2} react jointly to h; s3 -> s4 is a separate cluster
    out.push((
        "three values, symptom cluster",
        dist(3, 4, |d| {
            let (h, s1, s2, s3, s4) = (d[0], d[1], d[2], d[3], d[4]);
            let joint = [[3, 1, 1, 2], [1, 2, 3, 1], [2, 2, 1, 4]][h][2 * s1 + s2];
            joint * factor(s3 == 1, s4) * (1 + 2 * s3 as u64)
        }),
        chain_graph(3),
    ));

    // s1 flags h1, s2 flags h2, s3 depends on both, s4 -> s5 is unrelated
    out.push((
        "four values, five symptoms",
        dist(4, 5, |d| {
            let (h, s1, s2, s3, s4, s5) = (d[0], d[1], d[2], d[3], d[4], d[5]);
            factor(h == 0, s1)
                * factor(h == 1, s2)
                * [[1, 2], [3, 1], [2, 5], [4, 1]][2 * s1 + s2][s3]
                * factor(s4 == 0, s5)
                * (3 + s4 as u64)
        }),
        SimilarityGraph {
            hypothesis: "h".into(),
            values: hypothesis(4),
            edges: vec![
                ["h1".into(), "h2".into()],
                ["h2".into(), "h3".into()],
                ["h2".into(), "h4".into()],
                ["h3".into(), "h4".into()],
            ],
        },
    ));

    // generic joint table over everything
    out.push((
        "three values, generic table",
        dist(3, 3, |d| {
            let code = d[0] * 8 + d[1] * 4 + d[2] * 2 + d[3];
            1 + ((code as u64 * 7 + 3) % 11)
        }),
        SimilarityGraph {
            hypothesis: "h".into(),
            values: hypothesis(3),
            edges: vec![
                ["h1".into(), "h2".into()],
                ["h1".into(), "h3".into()],
                ["h2".into(), "h3".into()],
            ],
        },
    ));
    out
}
