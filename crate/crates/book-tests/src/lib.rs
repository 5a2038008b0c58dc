//! Every chapter of the guide, included as documentation so that its Rust
//! snippets run under `cargo test --doc`.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(introduction, "introduction.md");
chapter!(expansions, "expansions.md");
chapter!(statistics, "statistics.md");
chapter!(convergence, "convergence.md");
chapter!(frequencies, "frequencies.md");
chapter!(mean_without_frequency, "mean-without-frequency.md");
chapter!(no_mean, "no-mean.md");
chapter!(monte_carlo, "monte-carlo.md");
chapter!(cli, "cli.md");
