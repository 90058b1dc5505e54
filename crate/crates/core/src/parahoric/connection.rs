use crate::error::Result;
use crate::lie::{gauge_mode, GaugeWord, MatSeries};
use crate::series::RamifiedContext;

/// A formal connection (or Higgs field) given by its dz-coefficient.
///
/// In a ramified context the coefficient is that of dζ with `z = ζ^b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    pub mat: MatSeries,
    pub higgs: bool,
}

impl Connection {
    pub fn new(mat: MatSeries) -> Self {
        Connection { mat, higgs: false }
    }

    pub fn higgs(mat: MatSeries) -> Self {
        Connection { mat, higgs: true }
    }

    pub fn n(&self) -> usize {
        self.mat.n()
    }

    pub fn context(&self) -> RamifiedContext {
        self.mat.ctx
    }

    pub fn trunc(&self) -> i64 {
        self.mat.trunc()
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Replays `w`, honouring the Higgs flag.
    pub fn gauge(&self, w: &GaugeWord) -> Result<Connection> {
        Ok(Connection { mat: gauge_mode(w, &self.mat, self.higgs)?, higgs: self.higgs })
    }

    pub fn with_mat(&self, mat: MatSeries) -> Connection {
        Connection { mat, higgs: self.higgs }
    }
}
