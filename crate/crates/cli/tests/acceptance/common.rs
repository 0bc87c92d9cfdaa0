use std::sync::Arc;

use gpd_core::enumerate::groupoids_up_to;
use gpd_core::FiniteGroupoid;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Returns `Err(message)` from the enclosing function unless `cond` holds.
macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Unwraps a core result, turning the error into a criterion failure.
macro_rules! tri {
    ($e:expr) => {
        $e.map_err(|e| format!("{}: {e}", stringify!($e)))?
    };
}

/// One representative per isomorphism class, at most `max_arrows` arrows.
pub fn classes(max_arrows: usize) -> Vec<Arc<FiniteGroupoid>> {
    groupoids_up_to(max_arrows).expect("small bound").into_iter().map(Arc::new).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Re-validates a constructed groupoid from its raw tables.
pub fn revalidate(g: &FiniteGroupoid) -> Result<(), String> {
    let back = FiniteGroupoid::from_tables(&g.to_tables()).map_err(|e| e.to_string())?;
    back.check_laws().map_err(|e| e.to_string())?;
    ensure!(back == *g, "tables changed on re-validation");
    Ok(())
}
