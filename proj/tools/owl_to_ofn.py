#!/usr/bin/env python3
"""Convert the OAEI Anatomy track files into inputs for ontodiv.

    owl_to_ofn.py ontology IN.owl OUT.ofn
    owl_to_ofn.py alignment IN.rdf OUT.tsv
    owl_to_ofn.py anatomy DIR          # DIR holds mouse.owl, human.owl, reference.rdf

The last form writes mouse.ofn, human.ofn and reference.tsv next to the inputs,
which is the layout the acceptance binary expects in ONTODIV_ANATOMY_DIR.

Only the OWL subset ontodiv reads is emitted: class and object property
declarations, SubClassOf / EquivalentClasses between named classes and
existential restrictions, and label-like annotations. Everything else is dropped.
"""

import argparse
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
OBO = "http://www.geneontology.org/formats/oboInOwl#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
ALIGN = "http://knowledgeweb.semanticweb.org/heterogeneity/alignment"

LABELS = {
    RDFS + "label",
    OBO + "hasExactSynonym",
    OBO + "hasRelatedSynonym",
    SKOS + "prefLabel",
    SKOS + "altLabel",
}


def tag(ns, name):
    return "{%s}%s" % (ns, name)


def resource(el):
    return el.get(tag(RDF, "resource")) or el.get(tag(RDF, "about"))


def quote(text):
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


class Converter:
    def __init__(self, root):
        self.root = root
        self.base = root.get("{http://www.w3.org/XML/1998/namespace}base", "")
        # rdf:Description nodes referenced by synonyms carry the label text.
        self.nodes = {}
        for el in root.iter():
            about = el.get(tag(RDF, "about")) or el.get(tag(RDF, "nodeID"))
            if about is not None:
                self.nodes.setdefault(self.iri(about), el)
        self.classes = []
        self.properties = set()
        self.axioms = []
        self.annotations = []

    def iri(self, ref):
        if ref.startswith("#"):
            return self.base.rstrip("#") + ref
        return ref

    def expr(self, el):
        ref = resource(el)
        if ref is not None:
            return "<%s>" % self.iri(ref)
        restriction = el.find(tag(OWL, "Restriction"))
        if restriction is None:
            return None
        prop = restriction.find(tag(OWL, "onProperty"))
        filler = restriction.find(tag(OWL, "someValuesFrom"))
        if prop is None or filler is None:
            return None
        prop_iri = self.iri(resource(prop) or "")
        inner = self.expr(filler)
        if not prop_iri or inner is None:
            return None
        self.properties.add(prop_iri)
        return "ObjectSomeValuesFrom(<%s> %s)" % (prop_iri, inner)

    def label_text(self, el):
        if el.text and el.text.strip():
            return el.text.strip()
        ref = el.get(tag(RDF, "resource")) or el.get(tag(RDF, "nodeID"))
        node = self.nodes.get(self.iri(ref)) if ref else None
        if node is not None:
            label = node.find(tag(RDFS, "label"))
            if label is not None and label.text:
                return label.text.strip()
        return None

    def run(self):
        for prop in self.root.iter(tag(OWL, "ObjectProperty")):
            about = prop.get(tag(RDF, "about"))
            if about:
                self.properties.add(self.iri(about))
        for cls in self.root.iter(tag(OWL, "Class")):
            about = cls.get(tag(RDF, "about"))
            if not about:
                continue
            name = self.iri(about)
            self.classes.append(name)
            for child in cls:
                key = child.tag[1:].replace("}", "")
                if key == RDFS + "subClassOf":
                    sup = self.expr(child)
                    if sup is not None:
                        self.axioms.append("SubClassOf(<%s> %s)" % (name, sup))
                elif key == OWL + "equivalentClass":
                    other = self.expr(child)
                    if other is not None:
                        self.axioms.append("EquivalentClasses(<%s> %s)" % (name, other))
                elif key in LABELS:
                    text = self.label_text(child)
                    if text:
                        self.annotations.append(
                            "AnnotationAssertion(<%s> <%s> %s)" % (key, name, quote(text)))

    def ofn(self):
        iri = self.root.find(tag(OWL, "Ontology"))
        iri = (iri.get(tag(RDF, "about")) if iri is not None else "") or self.base
        lines = ["Ontology(<%s>" % iri]
        lines += ["Declaration(Class(<%s>))" % c for c in dict.fromkeys(self.classes)]
        lines += ["Declaration(ObjectProperty(<%s>))" % p for p in sorted(self.properties)]
        lines += self.axioms + self.annotations
        lines.append(")")
        return "\n".join(lines) + "\n"


def convert_ontology(src, dst):
    conv = Converter(ET.parse(src).getroot())
    conv.run()
    Path(dst).write_text(conv.ofn(), encoding="utf-8")
    print("%s: %d classes, %d axioms, %d labels" % (
        dst, len(conv.classes), len(conv.axioms), len(conv.annotations)))


def convert_alignment(src, dst):
    rows = []
    for cell in ET.parse(src).getroot().iter(tag(ALIGN, "Cell")):
        e1 = cell.find(tag(ALIGN, "entity1"))
        e2 = cell.find(tag(ALIGN, "entity2"))
        if e1 is None or e2 is None:
            continue
        rel = cell.findtext(tag(ALIGN, "relation"), "=").strip() or "="
        measure = cell.findtext(tag(ALIGN, "measure"), "1.0").strip() or "1.0"
        rows.append("%s\t%s\t%s\t%s" % (resource(e1), resource(e2), rel, measure))
    Path(dst).write_text("\n".join(rows) + "\n", encoding="utf-8")
    print("%s: %d mappings" % (dst, len(rows)))


def main(argv):
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)
    for name in ("ontology", "alignment"):
        p = sub.add_parser(name)
        p.add_argument("src")
        p.add_argument("dst")
    sub.add_parser("anatomy").add_argument("dir")
    args = ap.parse_args(argv)

    if args.cmd == "ontology":
        convert_ontology(args.src, args.dst)
    elif args.cmd == "alignment":
        convert_alignment(args.src, args.dst)
    else:
        d = Path(args.dir)
        convert_ontology(d / "mouse.owl", d / "mouse.ofn")
        convert_ontology(d / "human.owl", d / "human.ofn")
        convert_alignment(d / "reference.rdf", d / "reference.tsv")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
