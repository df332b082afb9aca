//! Seeded Monte-Carlo runs on G(n, p). Identical seeds give identical reports.

use num_rational::Ratio;

use harary::mates::Invariant;
use harary::random::{
    collision_rate, fr_vanishing_rate, max_degree_profile, triangle_in_blocks_rate,
    two_cycle_incidence_rate, EdgeProbability, ExperimentReport, GnpParams,
};
use harary::Limits;

fn main() -> harary::Result<()> {
    let seed = 7;
    let half = EdgeProbability::Constant(Ratio::new(1, 2));
    let sparse = EdgeProbability::AverageDegree(Ratio::from_integer(2));

    let mut reports = vec![
        fr_vanishing_rate(3, &GnpParams::new(12, half, seed, 200)?)?,
        // 13 is not a multiple of 3, so no graph is sampled
        fr_vanishing_rate(3, &GnpParams::new(13, half, seed, 200)?)?,
        triangle_in_blocks_rate(4, &GnpParams::new(16, half, seed, 200)?, 4)?,
        collision_rate(&Invariant::Chromatic, &GnpParams::new(7, half, seed, 30)?, &Limits::default())?,
        max_degree_profile(&GnpParams::new(1000, sparse, seed, 50)?)?,
    ];
    reports.extend(two_cycle_incidence_rate(3, &GnpParams::new(100, sparse, seed, 200)?, &[100, 400, 1600])?);

    println!("{}", ExperimentReport::CSV_HEADER);
    for r in &reports {
        println!("{}", r.csv_row());
    }
    Ok(())
}
