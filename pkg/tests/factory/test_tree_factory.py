import unittest

from src.wbptrees.exceptions.OracleExceptions import InvalidTreeError
from src.wbptrees.factory.tree_factory import TreeFactory
from src.wbptrees.passport.labels import STAR
from src.wbptrees.passport.notation import parse_passport
from src.wbptrees.passport.passport import Color, LabeledWeight


class TestTreeFactory(unittest.TestCase):
    def setUp(self):
        self.keys = [(Color.BLACK, LabeledWeight(2)), (Color.WHITE, LabeledWeight(1)),
                     (Color.WHITE, LabeledWeight(1, STAR))]

    def test_create_from_forest(self):
        # black root of weight 2 with a starred white leaf, then a plain white leaf
        tree = TreeFactory.create_from_forest(0, ((1, 2, ()), (1, 1, ())), self.keys)
        self.assertEqual(tree.passport(), parse_passport("2 | 1_* 1"))
        self.assertEqual(tree.rotation[0], (0, 1))
        self.assertEqual(tree.vertices[1].label, STAR)

    def test_dictionary_round_trip(self):
        tree = TreeFactory.create_from_forest(0, ((1, 2, ()), (1, 1, ())), self.keys)
        document = TreeFactory.to_dictionary(tree)
        self.assertEqual(document["vertices"][1], {"color": "white", "weight": 1, "label": "*"})
        self.assertEqual(TreeFactory.create_from_dictionary(document), tree)

    def test_missing_key(self):
        with self.assertRaises(InvalidTreeError) as context:
            TreeFactory.create_from_dictionary({"vertices": [], "edges": []})
        self.assertIn("rotation", str(context.exception))

    def test_bad_value(self):
        document = {"vertices": [{"color": "red", "weight": 1}], "edges": [], "rotation": [[]]}
        with self.assertRaises(InvalidTreeError):
            TreeFactory.create_from_dictionary(document)


if __name__ == '__main__':
    unittest.main()
