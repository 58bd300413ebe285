use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module<R>(f: impl FnOnce(&Bound<'_, PyModule>) -> PyResult<R>) -> R {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "spbranch")?;
        spbranch::register(&m)?;
        f(&m)
    })
    .expect("python call succeeds")
}

#[test]
fn exposes_branching_and_insertion() {
    with_module(|m| {
        let rule: Vec<(Vec<u32>, u64)> = m.getattr("branching_rule")?.call1((2usize, vec![1u32, 1]))?.extract()?;
        assert_eq!(rule, vec![(vec![], 1), (vec![1, 1], 1)]);
        let p: Vec<Vec<u32>> = m.getattr("p_aii")?.call1((vec![vec![1u32, 2], vec![2, 3], vec![4]],))?.extract()?;
        assert_eq!(p, vec![vec![2]]);
        let f: Vec<(u32, u32)> = m.getattr("factors")?.call1(("psi", 2usize))?.extract()?;
        assert_eq!(f, vec![(2, 3), (2, 4)]);
        Ok(())
    });
}

#[test]
fn maps_errors_to_python_exceptions() {
    with_module(|m| {
        let py = m.py();
        let err = m.getattr("p_aii")?.call1((vec![vec![2u32, 1]],)).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
        let err = m.getattr("factors")?.call1(("chi", 2usize)).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
        let kwargs = pyo3::types::PyDict::new(py);
        kwargs.set_item("budget", 10u64)?;
        let err = m.getattr("verify")?.call((3usize, 8u32), Some(&kwargs)).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyRuntimeError>(py));
        Ok(())
    });
}
