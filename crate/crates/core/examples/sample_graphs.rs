//! Samples `G(n, p)` and `G(n, d)`, checks degrees, and round-trips the
//! regular graph through the edge-list format.
//!
//! ```text
//! cargo run --release --example sample_graphs
//! ```

use specgraph::cli_io::{format_edge_list, parse_edge_list};
use specgraph::graphgen::{degree_sequence, sample_gnp, sample_regular, Graph};

fn summary(name: &str, g: &Graph) {
    let deg = degree_sequence(g);
    let min = deg.iter().min().copied().unwrap_or(0);
    let max = deg.iter().max().copied().unwrap_or(0);
    let mean = deg.iter().sum::<usize>() as f64 / deg.len() as f64;
    println!("{name}: n = {}, m = {}, degree min/mean/max = {min}/{mean:.2}/{max}", g.n(), g.edge_count());
}

fn main() -> specgraph::Result<()> {
    let gnp = sample_gnp(2000, 0.2, 42)?;
    summary("G(2000, 0.2)", &gnp);
    println!("  expected edges = {:.0}", 0.2 * 2000.0 * 1999.0 / 2.0);

    // d <= 8 uses the exact pairing model, larger d the stub-matching sampler;
    // d > (n - 1) / 2 samples the complement
    for d in [3, 50, 700] {
        let g = sample_regular(1000, d, 7)?;
        summary(&format!("G(1000, {d})"), &g);
    }

    let g = sample_regular(12, 3, 1)?;
    let text = format_edge_list(&g);
    print!("edge list of a cubic graph on 12 vertices:\n{text}");
    let back = parse_edge_list(&text, "<memory>")?;
    assert_eq!(back.edges(), g.edges());
    println!("round trip ok");
    Ok(())
}
