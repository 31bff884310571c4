from foamcalc.corpus import annular_corpus, data_dir, shipped_corpus
from foamcalc.webs import AnnularWeb


def test_shipped_corpus_size_and_types():
    corpus = shipped_corpus()
    assert len(corpus) >= 20
    assert all(isinstance(w, AnnularWeb) for _, w in corpus)
    assert len({str(w.canonical()) for _, w in corpus}) == len(corpus)


def test_file_names_record_level_and_vertices():
    for name, w in shipped_corpus():
        _, k, v = name.removesuffix(".web").split("_")
        assert int(k[1:]) == w.k and int(v[1:]) == w.vertex_count()


def test_generated_corpus_is_rotation_free():
    webs = annular_corpus(3, 2)
    for i, a in enumerate(webs):
        for b in webs[i + 1:]:
            assert not a.is_rotation_of(b)


def test_data_files_are_packaged():
    assert (data_dir() / "webs" / "example_k11.web").is_file()
    assert sorted(p.name for p in (data_dir() / "foams").glob("*.foam"))
