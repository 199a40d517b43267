//! The on-disk result cache.

use std::fs;

use cusp_cli::{Cache, CACHE_FILE, CACHE_HEADER};

#[test]
fn values_round_trip_through_the_file() {
    let dir = tempfile::tempdir().unwrap();
    {
        let cache = Cache::open(dir.path()).unwrap();
        assert!(cache.is_empty());
        cache.insert("nilpairs", "n=3,p=2", 232).unwrap();
        cache.insert("stratum", "alpha=(K(0),J(2)),p=2", 4).unwrap();
    }
    let text = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
    assert_eq!(
        text,
        format!("{CACHE_HEADER}\nnilpairs;n=3,p=2;232\nstratum;alpha=(K(0),J(2)),p=2;4\n")
    );
    let cache = Cache::open(dir.path()).unwrap();
    assert_eq!(cache.get("nilpairs", "n=3,p=2"), Some(232));
    assert_eq!(cache.get("stratum", "alpha=(K(0),J(2)),p=2"), Some(4));
    assert_eq!(cache.get("nilpairs", "n=3,p=3"), None);
    assert!(cache.warnings().is_empty());
}

#[test]
fn memoized_values_skip_computation() {
    let cache = Cache::in_memory();
    let v: Result<u64, std::io::Error> = cache.get_or_compute("quot", "d=1,n=1,p=2", || Ok(3));
    assert_eq!(v.unwrap(), 3);
    let again: Result<u64, std::io::Error> =
        cache.get_or_compute("quot", "d=1,n=1,p=2", || panic!("recomputed"));
    assert_eq!(again.unwrap(), 3);
}

#[test]
fn corrupted_lines_are_rejected_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let body = format!("{CACHE_HEADER}\nquot;d=1,n=1,p=2;3\nquot;d=1;n=2;3\nallpairs;n=1,p=2;-2\nnot a line\n");
    fs::write(dir.path().join(CACHE_FILE), body).unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    assert_eq!(cache.len(), 1);
    assert_eq!(cache.get("quot", "d=1,n=1,p=2"), Some(3));
    assert_eq!(cache.warnings().len(), 3);
}

#[test]
fn other_engine_versions_are_discarded() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join(CACHE_FILE), "# cuspquot cache, engine 0.0.0\nquot;d=1,n=1,p=2;999\n")
        .unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    assert!(cache.is_empty());
    assert_eq!(cache.warnings().len(), 1);
    drop(cache);
    let text = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
    assert_eq!(text, format!("{CACHE_HEADER}\n"));
}
