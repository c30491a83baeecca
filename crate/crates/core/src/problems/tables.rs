//! The refinement tables: which example, CFL numbers and grids each one runs.

use super::ExampleId;

/// Cells judged against [`TableSpec::min_order`] start at this row; the
/// coarsest refinements are pre-asymptotic and shown unmarked.
pub const FIRST_JUDGED_ROW: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableSpec {
    pub id: &'static str,
    pub example: ExampleId,
    pub cfls: &'static [f64],
    pub ns: &'static [usize],
    /// Extra grids appended when the full 2D study is requested.
    pub optional_ns: &'static [usize],
    pub title: &'static str,
}

const CFLS: &[f64] = &[0.5, 1.0, 2.0];

pub const TABLES: [TableSpec; 10] = [
    TableSpec {
        id: "ex_diff_periodic",
        example: ExampleId::PeriodicAdvection,
        cfls: CFLS,
        ns: &[20, 40, 80, 160, 320],
        optional_ns: &[],
        title: "periodic advection at T = 2",
    },
    TableSpec {
        id: "ex_diff_dir",
        example: ExampleId::DirichletHeat,
        cfls: CFLS,
        ns: &[40, 80, 160, 320, 640, 1280],
        optional_ns: &[],
        title: "heat equation, time-independent Dirichlet data, T = 2",
    },
    TableSpec {
        id: "ex_diff_inflow",
        example: ExampleId::InflowHeat,
        cfls: CFLS,
        ns: &[20, 40, 80, 160, 320, 640],
        optional_ns: &[],
        title: "heat equation, time-dependent Dirichlet data, T = 0.5",
    },
    TableSpec {
        id: "ex_diff_Neu",
        example: ExampleId::NeumannHeat,
        cfls: CFLS,
        ns: &[40, 80, 160, 320, 640],
        optional_ns: &[],
        title: "heat equation, Neumann data, T = 0.5",
    },
    TableSpec {
        id: "1d-wave_dir",
        example: ExampleId::DirichletWave,
        cfls: CFLS,
        ns: &[20, 40, 80, 160, 320, 640],
        optional_ns: &[],
        title: "wave equation, Dirichlet data, T = 1",
    },
    TableSpec {
        id: "1d-wave_per",
        example: ExampleId::PeriodicWave,
        cfls: CFLS,
        ns: &[20, 40, 80, 160, 320, 640],
        optional_ns: &[],
        title: "wave equation, periodic, T = 1",
    },
    TableSpec {
        id: "1d_adv",
        example: ExampleId::ConvectionDiffusion,
        cfls: CFLS,
        ns: &[20, 40, 80, 160, 320, 640],
        optional_ns: &[],
        title: "convection-diffusion, Dirichlet data, T = 0.5",
    },
    TableSpec {
        id: "adv",
        example: ExampleId::Convection2D,
        cfls: CFLS,
        ns: &[20, 40, 80, 160],
        optional_ns: &[320],
        title: "2D convection, inflow data, T = 2",
    },
    TableSpec {
        id: "squre_wave",
        example: ExampleId::HalfCellHeat2D,
        cfls: CFLS,
        ns: &[20, 40, 80, 160],
        optional_ns: &[320],
        title: "2D diffusion on the half-cell mesh, T = 0.5",
    },
    TableSpec {
        id: "drumhead",
        example: ExampleId::DrumheadFirst,
        cfls: CFLS,
        ns: &[20, 40, 80, 160],
        optional_ns: &[320],
        title: "drumhead on the unit disk, first mode, T = 1",
    },
];

impl TableSpec {
    pub fn find(id: &str) -> Option<&'static TableSpec> {
        TABLES.iter().find(|t| t.id == id)
    }

    pub fn valid_ids() -> String {
        TABLES.iter().map(|t| t.id).collect::<Vec<_>>().join(", ")
    }

    pub fn grids(&self, full: bool) -> Vec<usize> {
        let mut ns = self.ns.to_vec();
        if full {
            ns.extend_from_slice(self.optional_ns);
        }
        ns
    }

    /// Smallest observed order marked PASS for partial sums of order `k`.
    pub fn min_order(&self, k: usize) -> f64 {
        k as f64 - 0.5
    }

    /// PASS/FAIL for an order cell, `None` for unjudged rows.
    pub fn judge(&self, k: usize, row: usize, order: Option<f64>) -> Option<bool> {
        if row < FIRST_JUDGED_ROW {
            return None;
        }
        order.map(|o| o >= self.min_order(k))
    }
}
