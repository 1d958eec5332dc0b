# UI package for the Coxeter Genus Tool (text, JSON and CSV presentation)
