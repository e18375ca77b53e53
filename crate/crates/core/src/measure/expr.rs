//! Abstract syntax of measure expressions and its display form.
//!
//! Printing is precedence-aware and round-trips: parsing the displayed text
//! yields a structurally equal tree.

use std::fmt;

/// The nine symbols a measure may reference: the four joint probabilities,
/// the four marginals, and the record count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Pxy,
    Pxny,
    Pnxy,
    Pnxny,
    Px,
    Py,
    Pnx,
    Pny,
    N,
}

impl Var {
    pub const ALL: [Var; 9] = [
        Var::Pxy,
        Var::Pxny,
        Var::Pnxy,
        Var::Pnxny,
        Var::Px,
        Var::Py,
        Var::Pnx,
        Var::Pny,
        Var::N,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Var::Pxy => "pxy",
            Var::Pxny => "pxny",
            Var::Pnxy => "pnxy",
            Var::Pnxny => "pnxny",
            Var::Px => "px",
            Var::Py => "py",
            Var::Pnx => "pnx",
            Var::Pny => "pny",
            Var::N => "n",
        }
    }

    pub fn from_str(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.as_str() == name)
    }

    /// Slot in the evaluation binding array.
    pub fn index(self) -> usize {
        match self {
            Var::Pxy => 0,
            Var::Pxny => 1,
            Var::Pnxy => 2,
            Var::Pnxny => 3,
            Var::Px => 4,
            Var::Py => 5,
            Var::Pnx => 6,
            Var::Pny => 7,
            Var::N => 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Ln,
    Log2,
    Abs,
    Min,
    Max,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Ln => "ln",
            Func::Log2 => "log2",
            Func::Abs => "abs",
            Func::Min => "min",
            Func::Max => "max",
        }
    }

    pub fn from_str(name: &str) -> Option<Func> {
        [Func::Sqrt, Func::Ln, Func::Log2, Func::Abs, Func::Min, Func::Max]
            .into_iter()
            .find(|f| f.name() == name)
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Min | Func::Max => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MeasureExpr {
    Number(f64),
    Var(Var),
    Neg(Box<MeasureExpr>),
    Binary(BinOp, Box<MeasureExpr>, Box<MeasureExpr>),
    Call(Func, Vec<MeasureExpr>),
}

impl MeasureExpr {
    pub fn binary(op: BinOp, lhs: MeasureExpr, rhs: MeasureExpr) -> MeasureExpr {
        MeasureExpr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    /// True when the tree references the record count `n` anywhere.
    pub fn references_n(&self) -> bool {
        match self {
            MeasureExpr::Number(_) => false,
            MeasureExpr::Var(v) => *v == Var::N,
            MeasureExpr::Neg(e) => e.references_n(),
            MeasureExpr::Binary(_, l, r) => l.references_n() || r.references_n(),
            MeasureExpr::Call(_, args) => args.iter().any(MeasureExpr::references_n),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            MeasureExpr::Number(_) | MeasureExpr::Var(_) | MeasureExpr::Call(..) => 5,
            MeasureExpr::Neg(_) => 3,
            MeasureExpr::Binary(op, ..) => op.precedence(),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        let parens = prec < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            MeasureExpr::Number(v) => write!(f, "{v}")?,
            MeasureExpr::Var(v) => write!(f, "{}", v.as_str())?,
            MeasureExpr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 3)?;
            }
            MeasureExpr::Binary(op, l, r) => {
                let p = op.precedence();
                // ^ is right-associative, everything else left-associative.
                let (lmin, rmin) = if *op == BinOp::Pow { (p + 1, 3) } else { (p, p + 1) };
                l.fmt_prec(f, lmin)?;
                write!(f, " {} ", op.symbol())?;
                r.fmt_prec(f, rmin)?;
            }
            MeasureExpr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    a.fmt_prec(f, 0)?;
                }
                write!(f, ")")?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for MeasureExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
