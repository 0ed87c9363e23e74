//! Building blocks of the `rootloci` command-line tool.

pub mod moduli_output;
pub mod record;
pub mod verify;

/// Above this `d` the naive method's `prod (e_i + 1)` term count gets large.
pub const COMFORTABLE_MAX_D: usize = 10;

pub fn size_warning(d: usize) -> Option<String> {
    (d > COMFORTABLE_MAX_D).then(|| {
        format!(
            "warning: d = {d} exceeds {COMFORTABLE_MAX_D}; the naive method enumerates prod(e_i + 1) terms and may be slow"
        )
    })
}
